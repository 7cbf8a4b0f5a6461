"""Model descriptors and the training-category grammar.

A servable model is identified by (base, training_category, direction).
Training categories follow the grammar

    baseline | ft | ft-syn-<ratio>[-<generator-base>]

where <ratio> is "h:h" or "<int>:<int>" (e.g. 1:1, 1:3, 1:5) and the
generator suffix marks a model switch: synthetic training data produced by
a different base model, e.g. "ft-syn-1:1-mbart" for an nllb model trained
on mbart-generated synthetic data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from yuemt.corpus.types import LANG_TAGS
from yuemt.errors import DescriptorError

BASES = ("opus", "nllb", "mbart", "toy")

_RATIO = r"(?:h:h|\d+:\d+)"
_CATEGORY_RE = re.compile(
    rf"^(?:baseline|ft|ft-syn-(?P<ratio>{_RATIO})(?:-(?P<generator>{'|'.join(BASES)}))?)$"
)


@dataclass(frozen=True)
class CategoryParts:
    kind: str  # baseline | ft | ft-syn
    ratio: str | None = None
    generator: str | None = None


def parse_category(category: str) -> CategoryParts:
    m = _CATEGORY_RE.match(category)
    if not m:
        raise DescriptorError(
            f"bad training category {category!r}; expected baseline, ft, or "
            f"ft-syn-<ratio>[-<generator>]"
        )
    if category == "baseline":
        return CategoryParts(kind="baseline")
    if category == "ft":
        return CategoryParts(kind="ft")
    return CategoryParts(kind="ft-syn", ratio=m.group("ratio"), generator=m.group("generator"))


def format_category(parts: CategoryParts) -> str:
    if parts.kind in ("baseline", "ft"):
        return parts.kind
    if parts.kind != "ft-syn" or not parts.ratio:
        raise DescriptorError(f"cannot format category parts {parts!r}")
    suffix = f"-{parts.generator}" if parts.generator else ""
    return f"ft-syn-{parts.ratio}{suffix}"


def make_category(ratio: str | None, trainee_base: str, generator_base: str | None) -> str:
    """Category for a fine-tuning run: plain ft without synthetic data,
    otherwise ft-syn-<ratio> with a generator suffix only on a model switch."""
    if ratio is None:
        return "ft"
    generator = None
    if generator_base is not None and generator_base != trainee_base:
        generator = generator_base
    return format_category(CategoryParts(kind="ft-syn", ratio=ratio, generator=generator))


@dataclass(frozen=True)
class ModelDescriptor:
    base: str
    training_category: str
    direction: tuple[str, str]
    path: str = ""
    display_name: str = ""

    def __post_init__(self):
        if self.base not in BASES:
            raise DescriptorError(f"unknown base {self.base!r}; expected one of {BASES}")
        parse_category(self.training_category)
        src, tgt = self.direction
        if src not in LANG_TAGS or tgt not in LANG_TAGS or src == tgt:
            raise DescriptorError(f"bad direction {self.direction!r}")
        object.__setattr__(self, "direction", (src, tgt))
        if not self.display_name:
            object.__setattr__(
                self, "display_name", f"{self.base}-{self.training_category}"
            )

    @property
    def key(self) -> str:
        src, tgt = self.direction
        return f"{self.base}/{self.training_category}/{src}-{tgt}"

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "training_category": self.training_category,
            "source_lang": self.direction[0],
            "target_lang": self.direction[1],
            "path": self.path,
            "display_name": self.display_name,
        }


def parse_descriptor(text: str, path: str = "") -> ModelDescriptor:
    """Parse the canonical "<base>/<category>/<src>-<tgt>" form."""
    parts = text.split("/")
    if len(parts) != 3 or "-" not in parts[2]:
        raise DescriptorError(f"bad descriptor {text!r}; expected base/category/src-tgt")
    base, category, langs = parts
    src, _, tgt = langs.partition("-")
    return ModelDescriptor(
        base=base, training_category=category, direction=(src, tgt), path=path
    )


def format_descriptor(descriptor: ModelDescriptor) -> str:
    return descriptor.key
