"""Corpus loading, cleaning, splitting, and merging."""

from yuemt.corpus.cleaning import (
    CleaningConfig,
    CleaningReport,
    PatternRule,
    cjk_char_count,
    clean,
)
from yuemt.corpus.io import load_corpus, load_mono, load_parallel, save_corpus
from yuemt.corpus.ops import merge, shuffle, split
from yuemt.corpus.types import (
    LANG_TAGS,
    PROVENANCE_REAL,
    PROVENANCE_SYNTHETIC,
    MonoCorpus,
    ParallelCorpus,
    Sentence,
    SentencePair,
)

__all__ = [
    "CleaningConfig",
    "CleaningReport",
    "LANG_TAGS",
    "MonoCorpus",
    "ParallelCorpus",
    "PatternRule",
    "PROVENANCE_REAL",
    "PROVENANCE_SYNTHETIC",
    "Sentence",
    "SentencePair",
    "cjk_char_count",
    "clean",
    "load_corpus",
    "load_mono",
    "load_parallel",
    "merge",
    "save_corpus",
    "shuffle",
    "split",
]
