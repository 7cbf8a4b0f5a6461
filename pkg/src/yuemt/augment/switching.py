"""Model-switch planning: fine-tune base X on synthetic data generated by a
fine-tuned model of a different base Y, yielding categories like
"ft-syn-1:1-mbart" (nllb trainee, mbart generator). Same-base generation
keeps the plain "ft-syn-<ratio>" name.
"""

from __future__ import annotations

from dataclasses import dataclass

from yuemt.backends.descriptors import (
    BASES,
    ModelDescriptor,
    make_category,
    parse_category,
)
from yuemt.errors import DependencyError, DescriptorError


@dataclass(frozen=True)
class SwitchPlan:
    """Experiment-config fragment tying a trainee base to a generator model."""

    trainee_base: str
    generator_key: str
    generator_base: str
    ratio: str
    training_category: str


def model_switch_plan(
    generator: ModelDescriptor, trainee_base: str, ratio: str = "1:1"
) -> SwitchPlan:
    """Plan a phase-2 run using `generator` (a phase-1 fine-tuned model) to
    produce the synthetic side for a `trainee_base` model."""
    if trainee_base not in BASES:
        raise DescriptorError(f"unknown trainee base {trainee_base!r}; expected one of {BASES}")
    if parse_category(generator.training_category).kind == "baseline":
        raise DependencyError(
            f"generator {generator.key} is not fine-tuned; run phase-1 fine-tuning first"
        )
    category = make_category(ratio=ratio, trainee_base=trainee_base, generator_base=generator.base)
    return SwitchPlan(
        trainee_base=trainee_base,
        generator_key=generator.key,
        generator_base=generator.base,
        ratio=ratio,
        training_category=category,
    )
