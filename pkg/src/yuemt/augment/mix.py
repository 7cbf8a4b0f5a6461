"""Ratio-controlled mixing of real and synthetic parallel data.

Named recipes:
  1:k   all real pairs plus k times that count sampled from the synthetic pool
  h:h   half of the real pairs (floor) plus an equal count of synthetic pairs

Counts floor on the real side and the synthetic side matches the resulting
integer count. Synthetic pairs are sampled without replacement with the
spec's seed and the combined output is shuffled with the same seed, so a
mix is fully determined by (real, synthetic, spec).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from yuemt.corpus.types import PROVENANCE_SYNTHETIC, ParallelCorpus
from yuemt.errors import ContractError, SizeError

NAMED_SPECS = ("h:h", "1:1", "1:3", "1:5")


@dataclass(frozen=True)
class MixSpec:
    name: str
    real_fraction: Fraction
    synthetic_multiple: Fraction
    seed: int = 0

    def __post_init__(self):
        if not (0 < self.real_fraction <= 1):
            raise ContractError(f"real_fraction must be in (0, 1], got {self.real_fraction}")
        if self.synthetic_multiple < 0:
            raise ContractError(f"synthetic_multiple must be >= 0, got {self.synthetic_multiple}")

    @classmethod
    def named(cls, name: str, seed: int = 0) -> "MixSpec":
        """Bind a named recipe: h:h or 1:k (k a positive integer)."""
        if name == "h:h":
            return cls(name=name, real_fraction=Fraction(1, 2), synthetic_multiple=Fraction(1), seed=seed)
        if ":" in name:
            left, _, right = name.partition(":")
            if left == "1" and right.isdigit() and int(right) >= 0:
                return cls(
                    name=name,
                    real_fraction=Fraction(1),
                    synthetic_multiple=Fraction(int(right)),
                    seed=seed,
                )
        raise ContractError(f"unknown mix spec {name!r}; expected one of {NAMED_SPECS}")

    def counts(self, real_size: int) -> tuple[int, int]:
        """(real_count, synthetic_count) for a real corpus of the given size."""
        real_count = math.floor(self.real_fraction * real_size)
        synthetic_count = math.floor(self.synthetic_multiple * real_count)
        return real_count, synthetic_count

    def describe(self) -> str:
        return (
            f"mix(spec={self.name}, real_fraction={self.real_fraction}, "
            f"synthetic_multiple={self.synthetic_multiple}, seed={self.seed})"
        )


def mix(real: ParallelCorpus, synthetic: ParallelCorpus, spec: MixSpec) -> ParallelCorpus:
    """Combine real and synthetic corpora per the spec; see module docstring."""
    if len(real) == 0:
        raise ContractError("mix requires at least one real pair")
    if real.direction and synthetic.direction and real.direction != synthetic.direction:
        raise ContractError(
            f"direction mismatch: real {real.direction} vs synthetic {synthetic.direction}"
        )

    real_count, synthetic_count = spec.counts(len(real))
    if synthetic_count > len(synthetic):
        raise SizeError(
            f"mix {spec.name} over {len(real)} real pairs needs {synthetic_count} "
            f"synthetic pairs but only {len(synthetic)} are available"
        )

    rng = random.Random(spec.seed)
    if real_count < len(real):
        real_part = rng.sample(list(real.items), real_count)
    else:
        real_part = list(real.items)
    synthetic_part = rng.sample(list(synthetic.items), synthetic_count)

    combined = [p.with_id(f"real:{p.id}") for p in real_part] + [
        p.with_id(f"syn:{p.id}") for p in synthetic_part
    ]
    rng.shuffle(combined)

    return ParallelCorpus(
        items=tuple(combined),
        name=f"{real.name}+{spec.name}",
        seed=spec.seed,
        log=real.log
        + (
            spec.describe()
            + f" -> {real_count} real + {synthetic_count} synthetic from {synthetic.name!r}",
        ),
    )
