"""Vertical (one token per line) corpus ingestion and statistics.

The vertical format has three tab-separated columns per token line:
WORD, LEMMA, TAG.  Sentence boundaries are blank lines or the literal
markers ``<s>`` / ``</s>``; lines starting with ``#`` are comments.
Lemmas are lowercased at ingestion time; word forms keep their case.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from termflex.errors import CorpusError

SENTENCE_MARKERS = {"<s>", "</s>"}


@dataclass(frozen=True)
class TaggedToken:
    word: str
    lemma: str
    tag: str


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple


class DomainCorpus:
    """An immutable tagged corpus for one domain.

    Keeps both the sentence segmentation and a flat token stream with
    sentence spans, which the query engine and the contextonym counter
    work on.
    """

    def __init__(self, domain, sentences):
        self.domain = domain
        self.sentences = tuple(sentences)
        if not self.sentences or not any(s.tokens for s in self.sentences):
            raise CorpusError("corpus contains no tokens")
        tokens = []
        spans = []
        for sent in self.sentences:
            start = len(tokens)
            tokens.extend(sent.tokens)
            spans.append((start, len(tokens)))
        self.tokens = tuple(tokens)
        self.sentence_spans = tuple(spans)

    @property
    def word_count(self):
        return len(self.tokens)

    @property
    def mean_word_length(self):
        return sum(len(t.word) for t in self.tokens) / len(self.tokens)

    def sentence_of(self, token_index):
        """Index of the sentence containing a flat token position."""
        import bisect

        starts = [s for s, _ in self.sentence_spans]
        return bisect.bisect_right(starts, token_index) - 1

    def __len__(self):
        return len(self.tokens)

    def __repr__(self):
        return f"DomainCorpus({self.domain!r}, {len(self.sentences)} sentences, {len(self.tokens)} tokens)"


def _iter_lines(source):
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def ingest_vertical(source, domain):
    """Parse vertical-format text into a :class:`DomainCorpus`.

    ``source`` may be a string, a file object or any iterable of lines.
    Malformed token lines (wrong column count, empty fields) raise
    :class:`CorpusError` with the offending line number.
    """
    sentences = []
    current = []
    index = 0

    def flush():
        nonlocal index
        if current:
            sentences.append(Sentence(index, tuple(current)))
            index += 1
            current.clear()

    for line_no, raw in enumerate(_iter_lines(source), start=1):
        line = raw.rstrip("\n").rstrip("\r")
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped or stripped in SENTENCE_MARKERS:
            flush()
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise CorpusError(
                f"expected 3 tab-separated columns, got {len(cols)}", line_no
            )
        word, lemma, tag = (c.strip() for c in cols)
        if not word or not lemma or not tag:
            raise CorpusError("empty field in token line", line_no)
        current.append(TaggedToken(word, lemma.lower(), tag))
    flush()

    if not sentences:
        raise CorpusError("corpus contains no tokens")
    return DomainCorpus(domain, sentences)


def to_vertical(corpus):
    """Serialise a corpus back to canonical vertical text.

    Canonical form uses a blank line between sentences and no comments,
    so ``ingest_vertical(to_vertical(c))`` reproduces ``c`` exactly.
    """
    blocks = []
    for sent in corpus.sentences:
        blocks.append(
            "\n".join(f"{t.word}\t{t.lemma}\t{t.tag}" for t in sent.tokens)
        )
    return "\n\n".join(blocks) + "\n"


def corpus_stats(corpus):
    """Return (word_count, mean_word_length)."""
    return corpus.word_count, corpus.mean_word_length
