"""Deterministic corpus transformations: shuffle, split, merge.

Shuffling uses Python's Mersenne Twister (random.Random(seed)) with a
Fisher-Yates shuffle, so any run is reproducible from the recorded seed.
"""

from __future__ import annotations

import random
from dataclasses import replace

from yuemt.corpus.types import Corpus, MonoCorpus, ParallelCorpus
from yuemt.errors import ContractError, IntegrityError, SizeError


def shuffle(corpus: Corpus, seed: int) -> Corpus:
    """Seeded permutation of the corpus items."""
    items = list(corpus.items)
    random.Random(seed).shuffle(items)
    return replace(
        corpus,
        items=tuple(items),
        seed=seed,
        log=corpus.log + (f"shuffle(seed={seed})",),
    )


def split(corpus: Corpus, sizes: tuple[int, int, int], seed: int) -> tuple[Corpus, Corpus, Corpus]:
    """Shuffle then partition into (train, dev, test) of the exact given sizes.

    Items beyond sum(sizes) are discarded. Deterministic for a given
    (corpus, sizes, seed); the three partitions are disjoint by id.
    """
    n_train, n_dev, n_test = sizes
    if min(sizes) < 0:
        raise SizeError(f"split sizes must be non-negative, got {sizes}")
    total = n_train + n_dev + n_test
    if total > len(corpus):
        raise SizeError(
            f"split sizes {sizes} need {total} items but corpus "
            f"{corpus.name!r} has {len(corpus)} (short by {total - len(corpus)})"
        )
    items = list(corpus.items)
    random.Random(seed).shuffle(items)

    def part(chunk, label):
        return replace(
            corpus,
            items=tuple(chunk),
            name=f"{corpus.name}/{label}" if corpus.name else label,
            seed=seed,
            log=corpus.log + (f"split({label}, sizes={sizes}, seed={seed})",),
        )

    train = part(items[:n_train], "train")
    dev = part(items[n_train:n_train + n_dev], "dev")
    test = part(items[n_train + n_dev:total], "test")
    return train, dev, test


def merge(a: ParallelCorpus, b: ParallelCorpus) -> ParallelCorpus:
    """Concatenate two parallel corpora (a first, then b).

    Directions must match. Ids are kept as-is unless the two corpora collide,
    in which case every id is namespaced by its corpus name.
    """
    if not isinstance(a, ParallelCorpus) or not isinstance(b, ParallelCorpus):
        raise ContractError("merge expects two parallel corpora")
    if a.direction is not None and b.direction is not None and a.direction != b.direction:
        raise ContractError(f"direction mismatch: {a.direction} vs {b.direction}")

    ids_a, ids_b = set(a.ids()), set(b.ids())
    if ids_a & ids_b:
        if a.name == b.name:
            raise IntegrityError(
                f"cannot merge corpora sharing name {a.name!r} and overlapping ids"
            )
        items = tuple(p.with_id(f"{a.name}:{p.id}") for p in a) + tuple(
            p.with_id(f"{b.name}:{p.id}") for p in b
        )
    else:
        items = a.items + b.items

    return ParallelCorpus(
        items=items,
        name=f"{a.name}+{b.name}",
        seed=a.seed,
        log=a.log + (f"merge({a.name!r} [{len(a)}], {b.name!r} [{len(b)}])",),
    )
