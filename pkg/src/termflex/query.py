"""A small bracket-constraint query language over tagged token streams.

Queries are sequences of token constraints::

    2:"N.*" [word="and"]? [tag!="V.*"]{0,5} [lemma="be"] 1:"N.*" within <s/>

* ``[attr="v1 v2" & attr2!="v3"]`` -- one token whose attributes satisfy
  the conjunction; values are anchored regexes, space-separated values
  are alternatives.  ``&`` between tests is optional.  ``[]`` matches
  any token.
* ``"N.*"`` is shorthand for ``[tag="N.*"]``; ``"RB.* DT.*"`` for a tag
  alternation.
* ``1:`` / ``2:`` prefixes capture the token position under that label.
* ``?`` and ``{m,n}`` quantify the preceding constraint.
* a trailing ``within <s/>`` restricts matches to single sentences.

Word values match case-sensitively unless written in lowercase, which
matches case-insensitively.  Lemma values always match the lowercased
lemma.  Matching enumerates every distinct capture assignment,
greedy-preferred, deduplicated on (sentence, bindings).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from termflex.errors import InputError, QueryParseError

ATTRS = ("word", "lemma", "tag")


@dataclass(frozen=True)
class AttributeTest:
    attr: str
    negated: bool
    values: tuple

    def compile(self):
        compiled = []
        for value in self.values:
            flags = 0
            if self.attr == "lemma" or (self.attr == "word" and value == value.lower()):
                flags = re.IGNORECASE
            try:
                compiled.append(re.compile(value, flags))
            except re.error as exc:
                raise QueryParseError(f"bad regex {value!r}: {exc}") from None
        return compiled


class Constraint:
    """Conjunction of attribute tests on a single token."""

    def __init__(self, tests):
        self.tests = tuple(tests)
        self._compiled = [(t.attr, t.negated, t.compile()) for t in self.tests]

    def matches(self, token):
        for attr, negated, regexes in self._compiled:
            value = getattr(token, attr)
            hit = any(r.fullmatch(value) for r in regexes)
            if hit == negated:
                return False
        return True


@dataclass
class QueryElement:
    constraint: Constraint
    min_count: int = 1
    max_count: int = 1
    capture: int | None = None


@dataclass
class Query:
    elements: list
    sentence_scoped: bool
    text: str


@dataclass(frozen=True)
class Match:
    sentence_index: int
    start: int
    end: int
    bindings: dict = field(hash=False)
    sentence_bounded: bool = True


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise QueryParseError(message, self.pos)

    def eof(self):
        return self.pos >= len(self.text)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while not self.eof() and self.text[self.pos].isspace():
            self.pos += 1

    def take(self, char):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char):
        if not self.take(char):
            self.error(f"expected {char!r}")

    def take_int(self):
        start = self.pos
        while not self.eof() and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start:self.pos])

    def take_word(self):
        start = self.pos
        while not self.eof() and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def take_quoted(self):
        self.expect('"')
        start = self.pos
        while not self.eof() and self.text[self.pos] != '"':
            self.pos += 1
        if self.eof():
            self.error("unterminated quote")
        content = self.text[start:self.pos]
        self.pos += 1
        return content


def _split_values(content, scanner):
    values = tuple(content.split())
    if not values:
        scanner.error("empty value")
    return values


def _parse_test(scanner):
    attr = scanner.take_word()
    if attr not in ATTRS:
        scanner.error(f"unknown attribute {attr!r}")
    scanner.skip_ws()
    if scanner.take("!"):
        scanner.expect("=")
        negated = True
    elif scanner.take("="):
        negated = False
    else:
        scanner.error("expected '=' or '!='")
    scanner.skip_ws()
    content = scanner.take_quoted()
    return AttributeTest(attr, negated, _split_values(content, scanner))


def _parse_bracket(scanner):
    scanner.expect("[")
    tests = []
    while True:
        scanner.skip_ws()
        if scanner.take("]"):
            break
        if scanner.eof():
            scanner.error("unterminated bracket")
        if tests:
            # '&' between tests is optional; plain whitespace also joins.
            scanner.take("&")
            scanner.skip_ws()
            if scanner.take("]"):
                break
        tests.append(_parse_test(scanner))
    return Constraint(tests)


def _parse_quantifier(scanner):
    if scanner.take("?"):
        return 0, 1
    if scanner.take("{"):
        scanner.skip_ws()
        low = scanner.take_int()
        if low is None:
            scanner.error("expected integer in quantifier")
        scanner.skip_ws()
        scanner.expect(",")
        scanner.skip_ws()
        high = scanner.take_int()
        if high is None:
            scanner.error("expected integer in quantifier")
        scanner.skip_ws()
        scanner.expect("}")
        if low > high:
            scanner.error(f"bad quantifier bounds {{{low},{high}}}")
        return low, high
    return 1, 1


SCOPE_RE = re.compile(r"within\s*<s/>\s*$")


def parse_query(text):
    """Parse query text into a :class:`Query`."""
    if not text or not text.strip():
        raise QueryParseError("empty query")
    body = text
    scoped = False
    m = SCOPE_RE.search(body)
    if m:
        scoped = True
        body = body[: m.start()]

    scanner = _Scanner(body)
    elements = []
    seen_captures = set()
    while True:
        scanner.skip_ws()
        if scanner.eof():
            break
        capture = None
        save = scanner.pos
        label = scanner.take_int()
        if label is not None and scanner.take(":"):
            capture = label
            if capture in seen_captures:
                scanner.error(f"duplicate capture label {capture}")
            seen_captures.add(capture)
        else:
            scanner.pos = save

        ch = scanner.peek()
        if ch == "[":
            constraint = _parse_bracket(scanner)
        elif ch == '"':
            content = scanner.take_quoted()
            constraint = Constraint(
                [AttributeTest("tag", False, _split_values(content, scanner))]
            )
        else:
            scanner.error(f"expected '[' or '\"', got {ch!r}")

        scanner.skip_ws()
        low, high = _parse_quantifier(scanner)
        elements.append(QueryElement(constraint, low, high, capture))

    if not elements:
        raise QueryParseError("query has no elements")
    return Query(elements, scoped, text.strip())


def _enumerate(tokens, elements, idx, pos, end, bindings, start, out):
    if idx == len(elements):
        out.append((start, pos, dict(bindings)))
        return
    elem = elements[idx]
    run = 0
    limit = min(elem.max_count, end - pos)
    while run < limit and elem.constraint.matches(tokens[pos + run]):
        run += 1
    if run < elem.min_count:
        return
    for count in range(run, elem.min_count - 1, -1):  # greedy first
        bound = elem.capture is not None and count >= 1
        if bound:
            bindings[elem.capture] = pos
        _enumerate(tokens, elements, idx + 1, pos + count, end, bindings, start, out)
        if bound:
            del bindings[elem.capture]


def match_query(query, corpus):
    """All matches of the query over the corpus, deduplicated.

    A match is reported once per distinct (sentence, capture bindings);
    where several spans share those, the earliest/greediest span wins.
    Results are ordered by sentence, start position and enumeration
    order.
    """
    if query.sentence_scoped:
        regions = corpus.sentence_spans
    else:
        regions = [(0, len(corpus.tokens))]
    matches = []
    seen = set()
    tokens = corpus.tokens
    for region_start, region_end in regions:
        for start in range(region_start, region_end + 1):
            found = []
            _enumerate(tokens, query.elements, 0, start, region_end, {}, start, found)
            for s, e, bindings in found:
                if s == e and not bindings:
                    continue  # ignore empty matches with nothing bound
                sent = corpus.sentence_of(s) if s < len(tokens) else len(corpus.sentence_spans) - 1
                key = (sent, tuple(sorted(bindings.items())))
                if key in seen:
                    continue
                seen.add(key)
                matches.append(
                    Match(sent, s, e, bindings, query.sentence_scoped)
                )
    return matches


def concordance(corpus, match, context=5):
    """One-line keyword-in-context view of a match.

    The matched span is wrapped in ``<`` ``>``; the context window is
    truncated at sentence edges for sentence-scoped matches.
    """
    if match.sentence_bounded:
        low, high = corpus.sentence_spans[match.sentence_index]
    else:
        low, high = 0, len(corpus.tokens)
    left = max(low, match.start - context)
    right = min(high, match.end + context)
    words = lambda a, b: " ".join(t.word for t in corpus.tokens[a:b])
    parts = []
    if left < match.start:
        parts.append(words(left, match.start))
    parts.append("<" + words(match.start, match.end) + ">")
    if match.end < right:
        parts.append(words(match.end, right))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Pattern library
# ---------------------------------------------------------------------------

BUILTIN_PATTERNS = {
    "hyper01": (
        '2:"N.*" [word="and"]? [tag!="V.*"]{0,5} [lemma="be"] "RB.* DT.*"{0,4} '
        '"JJ.*"? [lemma="type kind example group class"] [word="of"] '
        '[tag!="V.*"]{0,3} 1:"N.*" within <s/>'
    ),
    "hyper02": (
        '[lemma="type kind example class"] [word="of"] [tag!="V.* IN.*"]{0,5} '
        '1:"N.*" []{0,3} [lemma="include be"] "DT.*"? [tag!="V.* IN.*"]{0,5} '
        '[word="and"]? 2:"N.*" within <s/>'
    ),
    "hyper03": (
        '1:"N.*" [tag!="V.*"]{0,5} [word="such"] [word="as"] "DT.*"? '
        '[tag!="V.*"]{0,5} [word="and"]? 2:"N.*" within <s/>'
    ),
    "hyper04": (
        '1:"N.*" [tag!="V.*"]{0,5} [word="including"] [tag!="V.*"]{0,5} '
        '[word="and"]? 2:"N.*" within <s/>'
    ),
    "hyper05": (
        '2:"N.*" [tag!="V.*"]{0,5} [word="and"] [word="other"] '
        '[tag!="V.*"]{0,5} 1:[tag="N.*" & lemma!="type sort kind example group part"] '
        "within <s/>"
    ),
    "hyper06": (
        '2:"N.*" [word="and"]? [tag!="V.*"]{0,5} "MD"? [lemma="be"] '
        '[word!="not"]? [word="defined classified categori.ed"] [word="as"] '
        '"DT.*"? [lemma="type kind example class"]? [word="of"]? '
        '[tag!="V.*"]{0,2} 1:[tag="N.*" & lemma!="type sort kind example group class"] '
        "within <s/>"
    ),
    "hyper07": (
        '2:"N.*" [word="and"]? [tag!="V.*"]{0,5} "MD"? [lemma="be"] '
        '[word!="not"]{0,1} [word="considered"] [word="to"]? [word="be"]? '
        '"DT.*"? [tag!="V.* IN.*" lemma!="part"]? [lemma="type kind example class"]? '
        '[word="of"]? [tag!="V.* IN.*"]{0,3} 1:"N.*" within <s/>'
    ),
    "hyper08": (
        '2:"N.*" [lemma="be"] "DT.*"? '
        '1:[tag="N.*" & lemma!="type sort kind example group part"] within <s/>'
    ),
    "hyper09": (
        '[lemma="define"] "DT.*"? [word="and"]? [tag!="V.*"]{0,3} 2:"N.*" '
        '[word="as"] "DT.*"? [lemma="type kind example class"]? [word="of"]? '
        '[tag!="V.*"]{0,2} 1:[tag="N.*" & lemma!="type sort kind example group"] '
        "within <s/>"
    ),
    "hyper10": (
        '2:"N.*" [lemma="refer"] [word="to"] "DT.*"? '
        '[lemma="type kind example class"]? [word="of"]? [word="and"]? '
        '[tag!="V.*"]{0,3} 1:[tag="N.*" & lemma!="type sort kind example group part"] '
        "within <s/>"
    ),
}


def builtin_patterns():
    """Name -> parsed Query for the shipped hypernymy patterns."""
    return {name: parse_query(text) for name, text in BUILTIN_PATTERNS.items()}


_NAME_RE = re.compile(r"#\s*([A-Za-z0-9_-]+)\s*:\s*$")


def parse_pattern_library(text):
    """Parse a pattern library file.

    Format: blocks introduced by a ``#name:`` line, followed by the
    query (possibly wrapped over several lines).  Returns an ordered
    {name: Query} dict.
    """
    patterns = {}
    name = None
    buffer = []

    def flush():
        nonlocal name, buffer
        if name is not None:
            body = " ".join(buffer).strip()
            if not body:
                raise InputError(f"pattern {name!r} has no query")
            patterns[name] = parse_query(body)
        name = None
        buffer = []

    for line in text.splitlines():
        m = _NAME_RE.match(line.strip())
        if m:
            flush()
            name = m.group(1)
            if name in patterns:
                raise InputError(f"duplicate pattern name {name!r}")
            continue
        if line.strip().startswith("#"):
            continue
        if line.strip():
            if name is None:
                raise InputError("query text before any '#name:' header")
            buffer.append(line.strip())
    flush()
    if not patterns:
        raise InputError("pattern library is empty")
    return patterns


def serialize_pattern_library(patterns):
    blocks = []
    for name, query in patterns.items():
        text = query.text if isinstance(query, Query) else str(query)
        blocks.append(f"#{name}:\n{text}")
    return "\n\n".join(blocks) + "\n"
