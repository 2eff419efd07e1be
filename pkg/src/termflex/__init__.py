"""Corpus-based toolkit for contextually variable terminology.

Subpackages cover the full workflow: ingesting POS-tagged vertical
corpora, scoring domain-specific candidate terms, building a
cross-domain candidate matrix, querying token streams with a small
bracket-constraint query language, analysing contextonyms and hypernymy
patterns, and maintaining a concept knowledge base from which
domain-flexible definitions are assembled.
"""

from termflex.corpus import DomainCorpus, Sentence, TaggedToken, corpus_stats, ingest_vertical
from termflex.errors import (
    CorpusError,
    InputError,
    KBError,
    QueryParseError,
    TermflexError,
    ValidationFailure,
)

__all__ = [
    "TaggedToken",
    "Sentence",
    "DomainCorpus",
    "ingest_vertical",
    "corpus_stats",
    "TermflexError",
    "InputError",
    "CorpusError",
    "QueryParseError",
    "KBError",
    "ValidationFailure",
]

__version__ = "0.1.0"
