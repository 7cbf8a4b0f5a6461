"""Deterministic toy translator: a seeded character-substitution cipher.

The lowercase alphabet is split into a source half (a-m) and a target half
(n-z); a seed draws a pairing between the halves and the cipher maps every
letter to its partner. Being an involution, the same table serves both
directions and applying it twice is the identity, so the cipher is a
bijection on strings over the alphabet and desk-scale pipelines get exact
ground-truth translations. Characters outside the alphabet pass through.

TableBackend serves a learned token-substitution table (the toy trainer's
output): per-token argmax lookup with copy-through for unseen tokens.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from yuemt.backends.base import Backend, TranslationRequest
from yuemt.backends.descriptors import ModelDescriptor

SOURCE_CHARS = "abcdefghijklm"
TARGET_CHARS = "nopqrstuvwxyz"


def cipher_table(seed: int) -> dict[str, str]:
    """Seeded involution pairing source-half letters with target-half letters."""
    targets = list(TARGET_CHARS)
    random.Random(seed).shuffle(targets)
    table: dict[str, str] = {}
    for src, tgt in zip(SOURCE_CHARS, targets):
        table[src] = tgt
        table[tgt] = src
    return table


def apply_cipher(text: str, table: dict[str, str]) -> str:
    return "".join(table.get(ch, ch) for ch in text)


def argmax_target(counts: dict[str, int]) -> str:
    """Deterministic argmax over a target-count map: max count, then
    lexicographically smallest token."""
    return min(counts, key=lambda tok: (-counts[tok], tok))


class CipherBackend(Backend):
    """Oracle translator applying the seeded cipher character-by-character."""

    def __init__(self, descriptor: ModelDescriptor, seed: int):
        super().__init__(descriptor)
        self.seed = seed
        self._table = cipher_table(seed)

    def _translate(self, sentences, request: TranslationRequest) -> list[str]:
        return [apply_cipher(s, self._table) for s in sentences]


class TableBackend(Backend):
    """Serves a learned source-token -> target-counts table."""

    def __init__(self, descriptor: ModelDescriptor, table: dict[str, dict[str, int]]):
        super().__init__(descriptor)
        self._argmax = {src: argmax_target(counts) for src, counts in table.items() if counts}

    def _translate(self, sentences, request: TranslationRequest) -> list[str]:
        return [
            " ".join(self._argmax.get(tok, tok) for tok in sentence.split())
            for sentence in sentences
        ]


def save_table(table: dict[str, dict[str, int]], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps({"table": table}, ensure_ascii=False, sort_keys=True), encoding="utf-8"
    )
    return path


def load_table(path: str | Path) -> dict[str, dict[str, int]]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return {src: dict(counts) for src, counts in data["table"].items()}
