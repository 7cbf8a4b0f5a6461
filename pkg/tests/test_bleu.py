import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seg
from oracles import bleu_oracle
from yuemt.errors import ContractError
from yuemt.metrics.bleu import corpus_bleu


def test_identity_scores_exactly_100():
    hyps = [seg("the cat sat".split()), seg("on the mat".split())]
    assert corpus_bleu(hyps, hyps).score == 100.0


def test_repeated_token_clipping_matches_oracle():
    # "the the the the" vs "the cat": clipped unigram 1/4, higher orders zero.
    hyp = ["the", "the", "the", "the"]
    ref = ["the", "cat"]
    result = corpus_bleu([seg(hyp)], [seg(ref)])
    assert result.precisions[0] == pytest.approx(0.25)
    assert result.correct[1] == 0
    expected = bleu_oracle([hyp], [ref])
    assert result.score == pytest.approx(expected, rel=1e-12)


def test_pooled_counts_differ_from_mean_of_sentence_scores():
    pair_a = (["a", "b", "c", "d"], ["a", "b", "c", "d"])
    pair_b = (["a", "a", "a", "a"], ["a", "b"])
    pooled = corpus_bleu(
        [seg(pair_a[0]), seg(pair_b[0])], [seg(pair_a[1]), seg(pair_b[1])]
    ).score
    expected = bleu_oracle([pair_a[0], pair_b[0]], [pair_a[1], pair_b[1]])
    assert pooled == pytest.approx(expected, rel=1e-12)
    mean_of_sentences = (
        corpus_bleu([seg(pair_a[0])], [seg(pair_a[1])]).score
        + corpus_bleu([seg(pair_b[0])], [seg(pair_b[1])]).score
    ) / 2
    assert pooled != pytest.approx(mean_of_sentences)


def test_permutation_invariance_over_sentence_order():
    rng = random.Random(5)
    vocab = [f"w{i}" for i in range(12)]
    pairs = [
        (
            [rng.choice(vocab) for _ in range(rng.randint(1, 8))],
            [rng.choice(vocab) for _ in range(rng.randint(1, 8))],
        )
        for _ in range(6)
    ]
    base = corpus_bleu([seg(h) for h, _ in pairs], [seg(r) for _, r in pairs]).score
    shuffled = pairs[:]
    rng.shuffle(shuffled)
    permuted = corpus_bleu([seg(h) for h, _ in shuffled], [seg(r) for _, r in shuffled]).score
    assert permuted == pytest.approx(base, rel=1e-12)


def test_randomized_corpora_match_oracle():
    rng = random.Random(99)
    vocab = [f"t{i}" for i in range(20)]
    for _ in range(50):
        count = rng.randint(1, 10)
        hyps = [[rng.choice(vocab) for _ in range(rng.randint(0, 12))] for _ in range(count)]
        refs = [[rng.choice(vocab) for _ in range(rng.randint(1, 12))] for _ in range(count)]
        got = corpus_bleu([seg(h) for h in hyps], [seg(r) for r in refs]).score
        expected = bleu_oracle(hyps, refs)
        assert got == pytest.approx(expected, rel=1e-9, abs=1e-12)


@given(
    st.lists(
        st.lists(st.sampled_from("abcde"), min_size=1, max_size=10),
        min_size=1,
        max_size=6,
    )
)
@settings(max_examples=60, deadline=None)
def test_properties_hold_for_any_corpus(token_lists):
    segs = [seg(tokens) for tokens in token_lists]
    result = corpus_bleu(segs, segs)
    assert result.score == 100.0
    assert result.brevity_penalty <= 1.0
    assert all(0.0 <= p <= 1.0 for p in result.precisions)


def test_smoothing_none_zeroes_score_on_zero_precision():
    result = corpus_bleu([seg(["x", "y"])], [seg(["x", "z"])], smoothing="none")
    assert result.score == 0.0


def test_empty_hypothesis_sentence_contributes_zero_counts():
    result = corpus_bleu(
        [seg([]), seg(["a", "b"])], [seg(["a"]), seg(["a", "b"])]
    )
    assert result.score > 0.0
    assert result.hyp_len == 2


def test_length_mismatch_is_contract_error():
    with pytest.raises(ContractError):
        corpus_bleu([seg(["a"])], [seg(["a"]), seg(["b"])])
    with pytest.raises(ContractError):
        corpus_bleu([], [])


def test_brevity_penalty_applies_to_short_hypotheses():
    result = corpus_bleu([seg(["a", "b"])], [seg(["a", "b", "c", "d"])])
    assert result.brevity_penalty == pytest.approx(math.exp(1 - 4 / 2))
