"""Lexical metrics (BLEU, hLEPOR), embedding-metric adapters, score tables."""

from yuemt.metrics.adapters import (
    CallableAdapter,
    EmbeddingScores,
    HttpAdapter,
    MetricAdapter,
    SubprocessAdapter,
    embedding_metric_score,
)
from yuemt.metrics.bleu import BleuScore, corpus_bleu
from yuemt.metrics.hlepor import (
    DEFAULT_PARAMS,
    HleporBreakdown,
    HleporParams,
    align_tokens,
    corpus_hlepor,
    hlepor,
)
from yuemt.metrics.report import METRIC_COLUMNS, ScoreRow, ScoreTable, build_score_table
from yuemt.metrics.tokenize import SCHEMES, TokenizedSegment, tokenize

__all__ = [
    "BleuScore",
    "CallableAdapter",
    "DEFAULT_PARAMS",
    "EmbeddingScores",
    "HleporBreakdown",
    "HleporParams",
    "HttpAdapter",
    "METRIC_COLUMNS",
    "MetricAdapter",
    "SCHEMES",
    "ScoreRow",
    "ScoreTable",
    "SubprocessAdapter",
    "TokenizedSegment",
    "align_tokens",
    "build_score_table",
    "corpus_bleu",
    "corpus_hlepor",
    "embedding_metric_score",
    "hlepor",
    "tokenize",
]
