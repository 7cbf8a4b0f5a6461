"""Corpus-level BLEU from pooled clipped n-gram counts.

Statistics are pooled over the whole corpus (not averaged per sentence):
clipped n-gram matches and totals accumulate across segments, the score is
the geometric mean of the n-gram precisions times the brevity penalty,
scaled to 0-100.

Smoothing policy: with "epsilon" (the default), any precision whose match
count is zero is replaced by epsilon/total; with "none", a zero precision
zeroes the whole score. Orders longer than every hypothesis (total count 0)
are excluded from the geometric mean rather than treated as zero.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from yuemt.errors import ContractError
from yuemt.metrics.tokenize import TokenizedSegment, check_same_scheme

DEFAULT_MAX_N = 4
DEFAULT_EPSILON = 0.1


@dataclass(frozen=True)
class BleuScore:
    score: float
    precisions: tuple[float, ...]
    brevity_penalty: float
    hyp_len: int
    ref_len: int
    correct: tuple[int, ...]
    total: tuple[int, ...]
    scheme: str

    def as_dict(self) -> dict:
        return {
            "score": self.score,
            "precisions": list(self.precisions),
            "brevity_penalty": self.brevity_penalty,
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
            "scheme": self.scheme,
        }


def ngram_counts(tokens: tuple[str, ...], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(
    hyps: list[TokenizedSegment],
    refs: list[TokenizedSegment],
    max_n: int = DEFAULT_MAX_N,
    smoothing: str = "epsilon",
    epsilon: float = DEFAULT_EPSILON,
) -> BleuScore:
    """BLEU over aligned hypothesis/reference segment lists, in [0, 100]."""
    if len(hyps) != len(refs):
        raise ContractError(f"hypothesis/reference count mismatch: {len(hyps)} vs {len(refs)}")
    if not hyps:
        raise ContractError("corpus_bleu needs at least one segment pair")
    if smoothing not in ("epsilon", "none"):
        raise ContractError(f"unknown smoothing policy {smoothing!r}")
    scheme = check_same_scheme(hyps, refs)

    correct = [0] * max_n
    total = [0] * max_n
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hyps, refs):
        hyp_len += len(hyp.tokens)
        ref_len += len(ref.tokens)
        for n in range(1, max_n + 1):
            hyp_counts = ngram_counts(hyp.tokens, n)
            if not hyp_counts:
                continue
            ref_counts = ngram_counts(ref.tokens, n)
            total[n - 1] += sum(hyp_counts.values())
            correct[n - 1] += sum(
                min(count, ref_counts.get(gram, 0)) for gram, count in hyp_counts.items()
            )

    precisions: list[float] = []
    log_sum = 0.0
    effective_orders = 0
    zero_precision = False
    for n in range(max_n):
        if total[n] == 0:
            precisions.append(0.0)
            continue
        if correct[n] > 0:
            p = correct[n] / total[n]
        elif smoothing == "epsilon":
            p = epsilon / total[n]
        else:
            p = 0.0
            zero_precision = True
        precisions.append(p)
        if p > 0.0:
            log_sum += math.log(p)
        effective_orders += 1

    if hyp_len == 0 or effective_orders == 0 or zero_precision:
        bp = 0.0 if hyp_len == 0 else _brevity_penalty(hyp_len, ref_len)
        return BleuScore(0.0, tuple(precisions), bp, hyp_len, ref_len,
                         tuple(correct), tuple(total), scheme)

    bp = _brevity_penalty(hyp_len, ref_len)
    score = 100.0 * bp * math.exp(log_sum / effective_orders)
    return BleuScore(score, tuple(precisions), bp, hyp_len, ref_len,
                     tuple(correct), tuple(total), scheme)


def _brevity_penalty(hyp_len: int, ref_len: int) -> float:
    if hyp_len >= ref_len:
        return 1.0
    return math.exp(1.0 - ref_len / hyp_len)
