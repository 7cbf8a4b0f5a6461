"""Seeded toy-language corpora for desk-scale pipeline verification.

The toy "yue" side is a vocabulary of random tokens over the cipher's source
half of the alphabet; the toy "en" side is the ciphered form. Because the
cipher is exact, synthetic data generated from monolingual toy text is
perfectly correct, which makes end-to-end augmentation gains deterministic
instead of statistical.

Also provides noisy raw-dump generators (toy-token and CJK flavored) so the
cleaning stage has realistic forum-style junk to chew on.
"""

from __future__ import annotations

import random

from yuemt.backends.toy import SOURCE_CHARS, apply_cipher, cipher_table
from yuemt.corpus.types import MonoCorpus, ParallelCorpus, Sentence, SentencePair

DEFAULT_VOCAB_SIZE = 2000
DEFAULT_CIPHER_SEED = 20240304

# Cantonese-flavored character pool for CJK cleaning fixtures.
_CJK_POOL = "我哋係香港人今日天氣好唔得食飯未呀你佢咗嘅嚟講就真系點解多謝再見早晨遲到返工放假開心"


def make_vocabulary(seed: int, size: int = DEFAULT_VOCAB_SIZE) -> list[str]:
    """Unique source-half tokens (3-7 chars), deterministic for a seed."""
    rng = random.Random(seed)
    vocab: list[str] = []
    seen: set[str] = set()
    while len(vocab) < size:
        token = "".join(rng.choice(SOURCE_CHARS) for _ in range(rng.randint(3, 7)))
        if token not in seen:
            seen.add(token)
            vocab.append(token)
    return vocab


def _sample_sentence(rng: random.Random, vocab: list[str]) -> str:
    return " ".join(rng.choice(vocab) for _ in range(rng.randint(3, 12)))


def make_mono_corpus(
    seed: int,
    size: int,
    vocab: list[str] | None = None,
    name: str = "toy-mono",
    id_prefix: str = "m",
) -> MonoCorpus:
    rng = random.Random(seed)
    vocab = vocab or make_vocabulary(seed)
    items = tuple(
        Sentence(id=f"{id_prefix}-{i:06d}", text=_sample_sentence(rng, vocab), lang="yue")
        for i in range(size)
    )
    return MonoCorpus(items=items, name=name, seed=seed, log=(f"toylang.mono(seed={seed}, size={size})",))


def make_parallel_corpus(
    seed: int,
    size: int,
    cipher_seed: int = DEFAULT_CIPHER_SEED,
    vocab: list[str] | None = None,
    name: str = "toy-real",
    id_prefix: str = "p",
) -> ParallelCorpus:
    """Real-provenance pairs whose targets are the exact cipher translations."""
    rng = random.Random(seed)
    vocab = vocab or make_vocabulary(seed)
    table = cipher_table(cipher_seed)
    items = []
    for i in range(size):
        text = _sample_sentence(rng, vocab)
        pair_id = f"{id_prefix}-{i:06d}"
        items.append(
            SentencePair(
                source=Sentence(id=pair_id, text=text, lang="yue"),
                target=Sentence(id=pair_id, text=apply_cipher(text, table), lang="en"),
            )
        )
    return ParallelCorpus(
        items=tuple(items),
        name=name,
        seed=seed,
        log=(f"toylang.parallel(seed={seed}, size={size}, cipher_seed={cipher_seed})",),
    )


def _noise_up(rng: random.Random, line: str) -> str:
    """Wrap a clean line in forum-style junk the default rules remove."""
    if rng.random() < 0.4:
        line = f"ID{rng.randint(1000, 99999)}: {line}"
    if rng.random() < 0.3:
        line = f"{line} @user{rng.randint(10, 999)}"
    if rng.random() < 0.25:
        line = f"<blockquote>{line}</blockquote>"
    if rng.random() < 0.2:
        line = f"{line} https://example.test/t/{rng.randint(1, 9999)}"
    if rng.random() < 0.2:
        line = f"{line} [sosad]"
    return line


def make_noisy_mono_lines(seed: int, size: int, vocab: list[str] | None = None) -> list[str]:
    """Toy-token mono sentences wrapped in noise; for min_cjk_chars=0 cleaning."""
    rng = random.Random(seed)
    vocab = vocab or make_vocabulary(seed)
    return [_noise_up(rng, _sample_sentence(rng, vocab)) for _ in range(size)]


def make_noisy_cjk_lines(seed: int, size: int) -> list[str]:
    """CJK forum-dump lines: noisy long lines plus short stubs below the
    default 10-ideograph threshold."""
    rng = random.Random(seed)
    lines = []
    for _ in range(size):
        roll = rng.random()
        if roll < 0.15:
            # Too-short stub (1-9 ideographs), sometimes noisy.
            body = "".join(rng.choice(_CJK_POOL) for _ in range(rng.randint(1, 9)))
            lines.append(_noise_up(rng, body))
        elif roll < 0.2:
            # Pure-noise line that strips to nothing.
            lines.append(f"<img src=x{rng.randint(1, 99)}> [icon] @u{rng.randint(10, 99)}")
        else:
            body = "".join(rng.choice(_CJK_POOL) for _ in range(rng.randint(10, 28)))
            lines.append(_noise_up(rng, body))
    return lines


def lines_to_mono(lines: list[str], lang: str = "yue", name: str = "raw-dump") -> MonoCorpus:
    items = tuple(
        Sentence(id=f"raw-{i:06d}", text=line, lang=lang) for i, line in enumerate(lines)
    )
    return MonoCorpus(items=items, name=name)
