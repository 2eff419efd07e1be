"""Candidate term extraction by corpus-comparison specificity.

A lemma is a candidate term of a specialised corpus when its frequency
there is unexpectedly high relative to a large reference corpus.  The
default association measure is the signed log-likelihood ratio (G2)
over the 2x2 contingency table of (lemma, other) x (target, reference);
the sign is negative when the lemma is relatively rarer in the target.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from termflex.errors import InputError


def score_specificity(freq_target, size_target, freq_ref, size_ref):
    """Signed log-likelihood ratio for one lemma.

    Zero cells contribute nothing (0 * ln 0 := 0).  Returns exactly 0.0
    when the relative frequencies in target and reference are equal.
    """
    if size_target <= 0 or size_ref <= 0:
        raise InputError("corpus sizes must be positive")
    if not (0 <= freq_target <= size_target) or not (0 <= freq_ref <= size_ref):
        raise InputError("frequencies must lie within corpus sizes")

    if freq_target * size_ref == freq_ref * size_target:
        return 0.0

    observed = (
        freq_target,
        size_target - freq_target,
        freq_ref,
        size_ref - freq_ref,
    )
    total = size_target + size_ref
    rows = (size_target, size_ref)
    cols = (freq_target + freq_ref, total - freq_target - freq_ref)
    g2 = 0.0
    for i, obs in enumerate(observed):
        if obs == 0:
            continue
        expected = rows[i // 2] * cols[i % 2] / total
        g2 += obs * math.log(obs / expected)
    g2 *= 2.0
    if freq_target * size_ref < freq_ref * size_target:
        g2 = -g2
    return g2


@dataclass(frozen=True)
class CandidateTerm:
    lemma: str
    frequency: int
    score: float
    pos: str = "N.*"  # the tag filter the candidate was extracted under


@dataclass
class ReferenceCounts:
    """Lemma frequency list of the reference corpus."""

    counts: dict
    total_tokens: int

    def frequency(self, lemma):
        return self.counts.get(lemma, 0)


def load_reference_counts(source):
    """Parse a reference frequency list.

    Format: optional header line ``#total_tokens=N`` followed by
    ``LEMMA<TAB>FREQ`` lines.  Without the header, the total is the sum
    of the listed frequencies.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    counts = {}
    total = None
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = re.match(r"#\s*total_tokens\s*=\s*(\d+)\s*$", stripped)
            if m:
                total = int(m.group(1))
            continue
        cols = stripped.split("\t")
        if len(cols) != 2:
            raise InputError(
                f"reference counts line {line_no}: expected LEMMA<TAB>FREQ"
            )
        lemma, freq = cols
        try:
            counts[lemma.lower()] = counts.get(lemma.lower(), 0) + int(freq)
        except ValueError:
            raise InputError(
                f"reference counts line {line_no}: bad frequency {freq!r}"
            ) from None
    if not counts:
        raise InputError("reference counts are empty")
    if total is None:
        total = sum(counts.values())
    return ReferenceCounts(counts, total)


@dataclass
class VariantMap:
    """Maps orthographic/inflectional variants to a canonical lemma."""

    mapping: dict = field(default_factory=dict)

    def canonical(self, lemma):
        return self.mapping.get(lemma, lemma)


def load_variant_map(source):
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    mapping = {}
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = stripped.split("\t")
        if len(cols) != 2:
            raise InputError(f"variant map line {line_no}: expected VARIANT<TAB>CANONICAL")
        mapping[cols[0].lower()] = cols[1].lower()
    return VariantMap(mapping)


def extract_candidates(
    corpus,
    reference,
    pos_filter="N.*",
    include_nonpositive=False,
    variants=None,
):
    """Score every lemma of the corpus against the reference.

    Only tokens whose tag matches ``pos_filter`` (anchored regex) are
    counted.  Results are sorted by score descending, ties broken by
    lemma; non-positive scores are dropped unless requested.
    """
    tag_re = re.compile(pos_filter)
    counts = {}
    for token in corpus.tokens:
        if not tag_re.fullmatch(token.tag):
            continue
        lemma = token.lemma
        if variants is not None:
            lemma = variants.canonical(lemma)
        counts[lemma] = counts.get(lemma, 0) + 1

    size_target = corpus.word_count
    results = []
    for lemma, freq in counts.items():
        score = score_specificity(
            freq, size_target, reference.frequency(lemma), reference.total_tokens
        )
        if score <= 0 and not include_nonpositive:
            continue
        results.append(CandidateTerm(lemma, freq, score, pos_filter))
    results.sort(key=lambda c: (-c.score, c.lemma))
    return results
