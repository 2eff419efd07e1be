"""Contextonym sketches, hypernymy harvesting and superordinate tallies.

A contextonym of a keyword is a content word (verb, noun or adjective)
co-occurring with a nominal occurrence of the keyword within a window
of intervening tokens.  The window is derived from a character budget:
roughly the span a concordance line can display.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from termflex.errors import InputError
from termflex.query import builtin_patterns, concordance, match_query

#: Lemmas too unspecific to count as contextonyms.
EXCLUDED_LEMMAS = frozenset(
    "be have such other much many more do make another most".split()
)

DEFAULT_KEYWORD_TAG = "N.*"
DEFAULT_CANDIDATE_TAG = "[VNJ].*"


def derive_window(mean_word_length, char_budget=250):
    """Window size (intervening tokens) from a character budget.

    Half-up round of budget/mean_word_length, minus one (the keyword
    itself), clamped to >= 0.
    """
    if mean_word_length <= 0 or char_budget <= 0:
        raise InputError("mean word length and budget must be positive")
    n = int(
        (Decimal(str(char_budget)) / Decimal(str(mean_word_length))).quantize(
            Decimal("1"), rounding=ROUND_HALF_UP
        )
    )
    return max(n - 1, 0)


@dataclass(frozen=True)
class ContextonymEntry:
    lemma: str
    pos: str  # coarse class: first letter of the tag
    frequency: int


@dataclass
class ContextonymList:
    keyword: str
    domain: str
    window: int
    entries: list  # ContextonymEntry, ranked

    def lemmas(self, top_k=None):
        picked = self.entries if top_k is None else self.entries[:top_k]
        return [e.lemma for e in picked]


def contextonyms(
    keyword,
    corpus,
    window,
    top_n=None,
    keyword_tag=DEFAULT_KEYWORD_TAG,
    candidate_tag=DEFAULT_CANDIDATE_TAG,
    excluded=EXCLUDED_LEMMAS,
):
    """Count contextonyms of ``keyword`` across the whole corpus.

    The window counts intervening tokens (adjacent tokens are at
    distance 0) and is *not* bounded by sentence breaks.  A candidate is
    counted once per (keyword occurrence, position).  Entries are keyed
    on (lemma, coarse POS) and ranked by frequency descending, ties by
    lemma then POS.
    """
    if window < 0:
        raise InputError("window must be >= 0")
    key = keyword.lower()
    kw_re = re.compile(keyword_tag)
    cand_re = re.compile(candidate_tag)
    tokens = corpus.tokens
    counts = {}
    for i, token in enumerate(tokens):
        if token.lemma != key or not kw_re.fullmatch(token.tag):
            continue
        low = max(0, i - window - 1)
        high = min(len(tokens), i + window + 2)
        for j in range(low, high):
            if j == i:
                continue
            cand = tokens[j]
            if cand.lemma == key or cand.lemma in excluded:
                continue
            if not cand_re.fullmatch(cand.tag):
                continue
            entry_key = (cand.lemma, cand.tag[:1])
            counts[entry_key] = counts.get(entry_key, 0) + 1
    entries = [
        ContextonymEntry(lemma, pos, freq) for (lemma, pos), freq in counts.items()
    ]
    entries.sort(key=lambda e: (-e.frequency, e.lemma, e.pos))
    if top_n is not None:
        entries = entries[:top_n]
    return ContextonymList(key, corpus.domain, window, entries)


def compare_contextonym_sets(named_lists, top_k=50):
    """Partition top-k contextonyms by which lists share them.

    ``named_lists`` maps a name (usually a domain code) to either a
    :class:`ContextonymList` or a plain sequence of lemmas.  Returns a
    {membership signature: sorted lemmas} dict where the signature is
    the tuple of list names (sorted) containing the lemma.
    """
    if len(named_lists) < 2:
        raise InputError("need at least two contextonym lists to compare")
    sets = {}
    for name, lst in named_lists.items():
        if isinstance(lst, ContextonymList):
            lemmas = lst.lemmas(top_k)
        else:
            lemmas = list(lst)[:top_k]
        sets[name] = set(lemmas)
    membership = {}
    for name, lemmas in sets.items():
        for lemma in lemmas:
            membership.setdefault(lemma, set()).add(name)
    partition = {}
    for lemma, names in membership.items():
        partition.setdefault(tuple(sorted(names)), []).append(lemma)
    return {sig: sorted(lemmas) for sig, lemmas in partition.items()}


def shared_by_all(partition, names):
    """Convenience accessor: the cell shared by every named list."""
    return partition.get(tuple(sorted(names)), [])


@dataclass(frozen=True)
class HypernymHit:
    superordinate: str
    hyponym: str
    pattern: str
    sentence_index: int
    context: str


def harvest_pairs(corpus, patterns=None):
    """Run hypernymy patterns and collect (superordinate, hyponym) hits.

    Capture 1 is the superordinate, capture 2 the hyponym; matches
    missing either capture are skipped.  Returns hits ordered by
    pattern name, then corpus position.
    """
    if patterns is None:
        patterns = builtin_patterns()
    hits = []
    for name in sorted(patterns):
        for match in match_query(patterns[name], corpus):
            if 1 not in match.bindings or 2 not in match.bindings:
                continue
            sup = corpus.tokens[match.bindings[1]].lemma
            hypo = corpus.tokens[match.bindings[2]].lemma
            hits.append(
                HypernymHit(
                    sup, hypo, name, match.sentence_index, concordance(corpus, match)
                )
            )
    return hits


def hypernym_candidates(term, corpus, patterns=None):
    """Hypernymy hits whose hyponym is ``term``."""
    key = term.lower()
    return [h for h in harvest_pairs(corpus, patterns) if h.hyponym == key]


#: Prepositions that end the head noun phrase of a superordinate phrase.
_PHRASE_BREAKERS = frozenset("of in for from with to at on by".split())


def phrase_headword(phrase):
    """Head of a superordinate phrase, uppercased.

    The phrase is cut before its first preposition (so ``mixture of
    substances`` heads at MIXTURE) and the rightmost remaining token is
    the head; hyphenated compounds are kept whole.
    """
    tokens = [t for t in phrase.strip().lower().split() if t]
    if not tokens:
        raise InputError("empty superordinate phrase")
    head_part = []
    for token in tokens:
        if token in _PHRASE_BREAKERS:
            break
        head_part.append(token)
    if not head_part:
        head_part = tokens
    return head_part[-1].upper()


@dataclass(frozen=True)
class TallyRow:
    headword: str
    by_source: dict
    total: int


def tally_superordinates(candidates):
    """Group superordinate phrases by headword with per-source counts.

    ``candidates`` yields (phrase, source) pairs, one per attestation.
    Rows are sorted by total descending, then headword.
    """
    counts = {}
    sources = set()
    for phrase, source in candidates:
        head = phrase_headword(phrase)
        sources.add(source)
        row = counts.setdefault(head, {})
        row[source] = row.get(source, 0) + 1
    rows = [
        TallyRow(head, dict(by_source), sum(by_source.values()))
        for head, by_source in counts.items()
    ]
    rows.sort(key=lambda r: (-r.total, r.headword))
    return rows, sorted(sources)


def tally_to_tsv(rows, sources):
    header = ["HEADWORD"] + list(sources) + ["TOTAL"]
    lines = ["\t".join(header)]
    for row in rows:
        cells = [row.headword]
        cells += [str(row.by_source.get(s, 0)) for s in sources]
        cells.append(str(row.total))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"
