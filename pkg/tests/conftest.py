import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from yuemt.backends.descriptors import ModelDescriptor
from yuemt.backends.registry import ModelRegistry
from yuemt.corpus.types import ParallelCorpus, Sentence, SentencePair
from yuemt.metrics.tokenize import TokenizedSegment

CIPHER_SEED = 20240304


def seg(tokens, lang="en", scheme="whitespace"):
    return TokenizedSegment(tokens=tuple(tokens), lang=lang, scheme=scheme)


def make_pair(pair_id, src_text, tgt_text, provenance="real", generator=None):
    return SentencePair(
        source=Sentence(id=pair_id, text=src_text, lang="yue"),
        target=Sentence(id=pair_id, text=tgt_text, lang="en"),
        provenance=provenance,
        generator=generator,
    )


def make_parallel(pairs, name="fixture"):
    return ParallelCorpus(items=tuple(pairs), name=name)


@pytest.fixture
def toy_registry(tmp_path):
    """Registry with oracle cipher models in both directions plus a second
    toy category so filter tests have something to distinguish."""
    registry = ModelRegistry(tmp_path / "registry")
    for direction in (("yue", "en"), ("en", "yue")):
        registry.register(
            ModelDescriptor(base="toy", training_category="baseline", direction=direction),
            {"kind": "cipher", "seed": CIPHER_SEED},
        )
    registry.register(
        ModelDescriptor(base="toy", training_category="ft", direction=("yue", "en")),
        {"kind": "cipher", "seed": CIPHER_SEED},
    )
    return registry
