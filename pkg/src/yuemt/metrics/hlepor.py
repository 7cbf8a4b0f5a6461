"""hLEPOR: harmonic combination of length penalty, position-difference
penalty, and precision/recall, with a sub-factor breakdown per sentence.

Factors for a hypothesis of length c against a reference of length r:

  LP        1 if c == r, exp(1 - r/c) if c < r, exp(1 - c/r) if c > r
  NPosPenal exp(-NPD), NPD = (1/c) * sum over matched hypothesis tokens of
            |pos_hyp/c - pos_ref/r| with 1-based positions; unmatched tokens
            contribute 0 (they are already penalized through P and R)
  HPR       (1+beta^2)*P*R / (R + beta^2*P) with P = matched/c, R = matched/r;
            0 when nothing matches

  hlepor = (w_lp + w_npos + w_hpr)
           / (w_lp/LP + w_npos/NPosPenal + w_hpr/HPR),   0 if any factor is 0

Token alignment is exact-match, consuming each reference position at most
once, scanning the hypothesis left to right. Ambiguous candidates are
disambiguated by neighbor-context agreement inside a fixed window, then by
nearest normalized position, then by leftmost reference position. The
corpus score is the arithmetic mean of sentence scores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from yuemt.errors import ContractError
from yuemt.metrics.tokenize import TokenizedSegment, check_same_scheme


@dataclass(frozen=True)
class HleporParams:
    w_lp: float = 1.0
    w_npos: float = 1.0
    w_hpr: float = 1.0
    beta: float = 1.0
    window: int = 2

    def __post_init__(self):
        if min(self.w_lp, self.w_npos, self.w_hpr, self.beta) <= 0:
            raise ContractError("hLEPOR weights and beta must be positive")
        if self.window < 0:
            raise ContractError("context window must be >= 0")


DEFAULT_PARAMS = HleporParams()


@dataclass(frozen=True)
class HleporBreakdown:
    score: float
    lp: float
    npos_penal: float
    hpr: float
    npd: float
    matched: int
    hyp_len: int
    ref_len: int

    def as_dict(self) -> dict:
        return {
            "score": self.score,
            "lp": self.lp,
            "npos_penal": self.npos_penal,
            "hpr": self.hpr,
            "npd": self.npd,
            "matched": self.matched,
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
        }


def align_tokens(
    hyp: tuple[str, ...], ref: tuple[str, ...], window: int
) -> list[tuple[int, int]]:
    """Exact-match alignment as 1-based (hyp_pos, ref_pos) pairs.

    Each reference position is consumed at most once. When a hypothesis
    token has several unconsumed reference candidates, the one agreeing with
    the most neighbors inside the window wins; ties fall back to nearest
    normalized position, then to the leftmost candidate.
    """
    c, r = len(hyp), len(ref)
    used = [False] * r
    matches: list[tuple[int, int]] = []
    for i, token in enumerate(hyp):
        candidates = [j for j in range(r) if not used[j] and ref[j] == token]
        if not candidates:
            continue
        if len(candidates) == 1:
            j = candidates[0]
        else:
            def context_score(j: int) -> int:
                agree = 0
                for d in range(-window, window + 1):
                    if d == 0:
                        continue
                    hi, rj = i + d, j + d
                    if 0 <= hi < c and 0 <= rj < r and hyp[hi] == ref[rj]:
                        agree += 1
                return agree

            j = min(
                candidates,
                key=lambda j: (-context_score(j), abs((i + 1) / c - (j + 1) / r), j),
            )
        used[j] = True
        matches.append((i + 1, j + 1))
    return matches


def hlepor(
    hyp: TokenizedSegment,
    ref: TokenizedSegment,
    params: HleporParams = DEFAULT_PARAMS,
) -> HleporBreakdown:
    """Sentence-level hLEPOR in [0, 1] with its sub-factor breakdown."""
    c, r = len(hyp.tokens), len(ref.tokens)
    if c == 0 or r == 0:
        raise ContractError("hLEPOR is undefined for empty hypothesis or reference")
    check_same_scheme([hyp], [ref])

    if c == r:
        lp = 1.0
    elif c < r:
        lp = math.exp(1.0 - r / c)
    else:
        lp = math.exp(1.0 - c / r)

    matches = align_tokens(hyp.tokens, ref.tokens, params.window)
    matched = len(matches)

    npd = sum(abs(i / c - j / r) for i, j in matches) / c
    npos_penal = math.exp(-npd)

    if matched == 0:
        hpr = 0.0
    else:
        p = matched / c
        rec = matched / r
        beta_sq = params.beta * params.beta
        hpr = (1.0 + beta_sq) * p * rec / (rec + beta_sq * p)

    if lp == 0.0 or npos_penal == 0.0 or hpr == 0.0:
        score = 0.0
    else:
        weight_sum = params.w_lp + params.w_npos + params.w_hpr
        score = weight_sum / (params.w_lp / lp + params.w_npos / npos_penal + params.w_hpr / hpr)

    return HleporBreakdown(
        score=score,
        lp=lp,
        npos_penal=npos_penal,
        hpr=hpr,
        npd=npd,
        matched=matched,
        hyp_len=c,
        ref_len=r,
    )


def corpus_hlepor(
    hyps: list[TokenizedSegment],
    refs: list[TokenizedSegment],
    params: HleporParams = DEFAULT_PARAMS,
) -> tuple[float, list[HleporBreakdown]]:
    """Mean sentence hLEPOR plus the per-sentence breakdowns."""
    if len(hyps) != len(refs):
        raise ContractError(f"hypothesis/reference count mismatch: {len(hyps)} vs {len(refs)}")
    if not hyps:
        raise ContractError("corpus_hlepor needs at least one segment pair")
    breakdowns = [hlepor(h, r, params) for h, r in zip(hyps, refs)]
    mean = sum(b.score for b in breakdowns) / len(breakdowns)
    return mean, breakdowns
