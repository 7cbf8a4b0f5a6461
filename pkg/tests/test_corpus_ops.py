import pytest

from conftest import make_pair, make_parallel
from yuemt.corpus.ops import merge, shuffle, split
from yuemt.corpus.types import MonoCorpus, ParallelCorpus, Sentence
from yuemt.errors import ContractError, IntegrityError, SizeError


def make_mono(n, prefix="s"):
    return MonoCorpus(
        items=tuple(Sentence(id=f"{prefix}{i}", text=f"句{i}", lang="yue") for i in range(n)),
        name="mono",
    )


def pairs(n, prefix="p", name="real"):
    return make_parallel(
        [make_pair(f"{prefix}{i}", f"src {i}", f"tgt {i}") for i in range(n)], name=name
    )


def test_split_sizes_exact_and_disjoint():
    corpus = make_mono(440)
    train, dev, test = split(corpus, (380, 30, 30), seed=7)
    assert (len(train), len(dev), len(test)) == (380, 30, 30)
    ids = [set(c.ids()) for c in (train, dev, test)]
    assert not (ids[0] & ids[1]) and not (ids[0] & ids[2]) and not (ids[1] & ids[2])
    assert len(ids[0] | ids[1] | ids[2]) == 440


def test_split_is_deterministic():
    corpus = make_mono(100)
    first = split(corpus, (80, 10, 10), seed=3)
    second = split(corpus, (80, 10, 10), seed=3)
    for a, b in zip(first, second):
        assert a.ids() == b.ids()
    different = split(corpus, (80, 10, 10), seed=4)
    assert different[0].ids() != first[0].ids()


def test_degenerate_split_takes_everything_into_train():
    corpus = make_mono(25)
    train, dev, test = split(corpus, (25, 0, 0), seed=1)
    assert len(train) == 25 and len(dev) == 0 and len(test) == 0
    assert sorted(train.ids()) == sorted(corpus.ids())


def test_split_overflow_reports_deficit():
    with pytest.raises(SizeError, match="short by 5"):
        split(make_mono(10), (10, 3, 2), seed=0)


def test_split_records_transformation_log():
    train, _, _ = split(make_mono(10), (8, 1, 1), seed=9)
    assert any("split(train" in entry for entry in train.log)


def test_shuffle_permutes_deterministically():
    corpus = make_mono(50)
    a = shuffle(corpus, seed=5)
    b = shuffle(corpus, seed=5)
    assert a.ids() == b.ids()
    assert sorted(a.ids()) == sorted(corpus.ids())


def test_merge_concatenates_in_order():
    a = pairs(38, prefix="a", name="words")
    b = pairs(14, prefix="b", name="extra")
    merged = merge(a, b)
    assert len(merged) == 52
    assert merged.ids()[:38] == a.ids()
    assert merged.ids()[38:] == b.ids()


def test_merge_with_empty_is_identity_content():
    a = pairs(5, name="full")
    empty = ParallelCorpus(items=(), name="empty")
    merged = merge(a, empty)
    assert [(p.source.text, p.target.text) for p in merged] == [
        (p.source.text, p.target.text) for p in a
    ]
    assert merged.ids() == a.ids()


def test_merge_order_independent_content():
    a = pairs(4, prefix="a", name="one")
    b = pairs(3, prefix="b", name="two")
    ab = {(p.source.text, p.target.text) for p in merge(a, b)}
    ba = {(p.source.text, p.target.text) for p in merge(b, a)}
    assert ab == ba


def test_merge_namespaces_colliding_ids():
    a = pairs(3, prefix="x", name="first")
    b = pairs(3, prefix="x", name="second")
    merged = merge(a, b)
    assert len(set(merged.ids())) == 6
    assert "first:x0" in merged.ids() and "second:x0" in merged.ids()


def test_merge_same_name_collision_is_integrity_error():
    a = pairs(2, prefix="x", name="dup")
    b = pairs(2, prefix="x", name="dup")
    with pytest.raises(IntegrityError):
        merge(a, b)


def test_merge_direction_mismatch_is_contract_error():
    from yuemt.corpus.types import SentencePair

    a = pairs(2, name="fwd")
    rev_pair = SentencePair(
        source=Sentence(id="r0", text="hello", lang="en"),
        target=Sentence(id="r0", text="你好", lang="yue"),
    )
    reverse = ParallelCorpus(items=(rev_pair,), name="rev")
    with pytest.raises(ContractError):
        merge(a, reverse)
