"""Cross-domain candidate matrix and working-list filtering.

A lemma "occurs in" a domain when its frequency there reaches the
domain's occurrence threshold (by default one occurrence per 5000
corpus words).  Lemmas present in enough domains survive into the
working list, after removal of general scientific-technical lexicon
(STL) items, abbreviations and known polysemous forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from termflex.domains import sort_domains
from termflex.errors import InputError


def domain_threshold(word_count, ratio=5000, mode="floor", fixed=64):
    """Occurrence threshold for one domain corpus.

    ``mode`` is ``floor`` or ``round`` (word_count/ratio, clamped to at
    least 1) or ``fixed`` (use ``fixed`` for every domain).
    """
    if mode == "fixed":
        if fixed < 1:
            raise InputError("fixed threshold must be >= 1")
        return int(fixed)
    if word_count <= 0 or ratio <= 0:
        raise InputError("word_count and ratio must be positive")
    quotient = word_count / ratio
    if mode == "floor":
        value = math.floor(quotient)
    elif mode == "round":
        value = math.floor(quotient + 0.5)
    else:
        raise InputError(f"unknown threshold mode {mode!r}")
    return max(1, value)


@dataclass
class StlList:
    """General scientific-technical lexicon (case-insensitive lemmas)."""

    lemmas: set = field(default_factory=set)

    def __contains__(self, lemma):
        return lemma.lower() in self.lemmas


def load_stl(source):
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    lemmas = set()
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            lemmas.add(stripped.lower())
    return StlList(lemmas)


KNOWN_FLAGS = {"abbreviation", "polysemous"}


def load_flags(source):
    """Parse a LEMMA<TAB>FLAG file into {lemma: set(flags)}."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    flags = {}
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = stripped.split("\t")
        if len(cols) != 2:
            raise InputError(f"flags line {line_no}: expected LEMMA<TAB>FLAG")
        lemma, flag = cols[0].lower(), cols[1].lower()
        if flag not in KNOWN_FLAGS:
            raise InputError(f"flags line {line_no}: unknown flag {flag!r}")
        flags.setdefault(lemma, set()).add(flag)
    return flags


class TermDomainMatrix:
    """Lemma-by-domain frequency matrix with per-domain thresholds."""

    def __init__(self, domain_order, thresholds):
        self.domain_order = list(domain_order)
        if len(set(self.domain_order)) != len(self.domain_order):
            raise InputError("duplicate domain code in matrix")
        self.thresholds = dict(thresholds)
        for code in self.domain_order:
            if code not in self.thresholds:
                raise InputError(f"missing threshold for domain {code}")
        self.rows = {}

    def set_frequency(self, lemma, domain, frequency):
        if domain not in self.thresholds:
            raise InputError(f"unknown domain {domain!r}")
        self.rows.setdefault(lemma.lower(), {})[domain] = frequency

    def frequency(self, lemma, domain):
        return self.rows.get(lemma.lower(), {}).get(domain, 0)

    def present(self, lemma, domain):
        return self.frequency(lemma, domain) >= self.thresholds[domain]

    def presence_domains(self, lemma):
        return [d for d in self.domain_order if self.present(lemma, d)]

    def presence_count(self, lemma):
        return len(self.presence_domains(lemma))

    def lemmas(self):
        return sorted(self.rows)


def build_matrix(candidates_by_domain, thresholds):
    """Build a matrix from per-domain candidate lists.

    ``candidates_by_domain`` maps domain code to either a list of
    :class:`~termflex.extraction.CandidateTerm` or a {lemma: freq} dict.
    """
    order = sort_domains(candidates_by_domain)
    if len(candidates_by_domain) != len(set(candidates_by_domain)):
        raise InputError("duplicate domain code")
    matrix = TermDomainMatrix(order, thresholds)
    for domain, candidates in candidates_by_domain.items():
        if isinstance(candidates, dict):
            items = candidates.items()
        else:
            items = ((c.lemma, c.frequency) for c in candidates)
        for lemma, freq in items:
            matrix.set_frequency(lemma, domain, freq)
    return matrix


@dataclass(frozen=True)
class WorkingListRow:
    lemma: str
    domains: tuple  # codes where present
    frequencies: dict  # code -> frequency (present domains only)
    stl: bool


def filter_working_list(matrix, min_domains=3, stl=None, flags=None):
    """Select lemmas present in at least ``min_domains`` domains.

    STL lemmas and lemmas flagged ``abbreviation`` or ``polysemous``
    are excluded; the STL verdict is still recorded on each row for
    reporting.
    """
    if min_domains < 1:
        raise InputError("min_domains must be >= 1")
    rows = []
    for lemma in matrix.lemmas():
        present = matrix.presence_domains(lemma)
        if len(present) < min_domains:
            continue
        if flags and flags.get(lemma):
            continue
        in_stl = stl is not None and lemma in stl
        if in_stl:
            continue
        rows.append(
            WorkingListRow(
                lemma,
                tuple(present),
                {d: matrix.frequency(lemma, d) for d in present},
                in_stl,
            )
        )
    return rows


def matrix_to_tsv(matrix, min_domains=1, stl=None):
    """Render the full matrix as TSV.

    Columns: LEMMA, N_DOMAINS, STL, then one column per domain in
    canonical order.  Cells below threshold render as ``-``.
    """
    header = ["LEMMA", "N_DOMAINS", "STL"] + matrix.domain_order
    lines = ["\t".join(header)]
    for lemma in matrix.lemmas():
        count = matrix.presence_count(lemma)
        if count < min_domains:
            continue
        in_stl = stl is not None and lemma in stl
        cells = [lemma, str(count), "yes" if in_stl else "-"]
        for domain in matrix.domain_order:
            if matrix.present(lemma, domain):
                cells.append(str(matrix.frequency(lemma, domain)))
            else:
                cells.append("-")
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def matrix_from_tsv(text):
    """Parse TSV produced by :func:`matrix_to_tsv`.

    Thresholds are not stored in the file; reloaded matrices use a
    threshold of 1 with ``-`` cells treated as frequency 0.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty matrix file")
    header = lines[0].split("\t")
    if header[:3] != ["LEMMA", "N_DOMAINS", "STL"]:
        raise InputError("bad matrix header")
    domains = header[3:]
    matrix = TermDomainMatrix(domains, {d: 1 for d in domains})
    for line_no, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(header):
            raise InputError(f"matrix line {line_no}: wrong column count")
        lemma = cells[0]
        for domain, cell in zip(domains, cells[3:]):
            if cell != "-":
                try:
                    matrix.set_frequency(lemma, domain, int(cell))
                except ValueError:
                    raise InputError(
                        f"matrix line {line_no}: bad frequency {cell!r}"
                    ) from None
    return matrix
