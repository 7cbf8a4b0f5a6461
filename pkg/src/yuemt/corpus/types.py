"""Core corpus value types.

Everything here is immutable after construction: operations elsewhere return
new corpora and append to the transformation log instead of mutating, so
corpora are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from yuemt.errors import ContractError, IntegrityError

LANG_TAGS = ("yue", "en")

PROVENANCE_REAL = "real"
PROVENANCE_SYNTHETIC = "synthetic"


@dataclass(frozen=True)
class Sentence:
    """One sentence with a stable id and a language tag."""

    id: str
    text: str
    lang: str

    def __post_init__(self):
        if self.lang not in LANG_TAGS:
            raise ContractError(f"unsupported language tag {self.lang!r}; expected one of {LANG_TAGS}")
        if not self.id:
            raise ContractError("sentence id must be non-empty")


@dataclass(frozen=True)
class SentencePair:
    """An aligned source/target pair with provenance bookkeeping.

    Both sides carry the same id (the pair id). Synthetic pairs must name the
    model that generated them; real pairs must not.
    """

    source: Sentence
    target: Sentence
    provenance: str = PROVENANCE_REAL
    generator: str | None = None

    def __post_init__(self):
        if self.provenance not in (PROVENANCE_REAL, PROVENANCE_SYNTHETIC):
            raise ContractError(f"unknown provenance {self.provenance!r}")
        if (self.provenance == PROVENANCE_SYNTHETIC) != (self.generator is not None):
            raise ContractError("provenance 'synthetic' requires a generator id and vice versa")
        if self.source.lang == self.target.lang:
            raise ContractError(f"source and target share language {self.source.lang!r}")
        if self.source.id != self.target.id:
            raise ContractError(f"pair sides disagree on id: {self.source.id!r} vs {self.target.id!r}")

    @property
    def id(self) -> str:
        return self.source.id

    @property
    def direction(self) -> tuple[str, str]:
        return (self.source.lang, self.target.lang)

    def with_id(self, new_id: str) -> "SentencePair":
        return replace(
            self,
            source=replace(self.source, id=new_id),
            target=replace(self.target, id=new_id),
        )


def _check_unique_ids(ids: list[str], what: str) -> None:
    if len(set(ids)) != len(ids):
        seen: set[str] = set()
        for i in ids:
            if i in seen:
                raise IntegrityError(f"duplicate id {i!r} in {what}")
            seen.add(i)


@dataclass(frozen=True)
class MonoCorpus:
    """Ordered monolingual corpus with a transformation log."""

    items: tuple[Sentence, ...]
    name: str = ""
    seed: int | None = None
    log: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "log", tuple(self.log))
        _check_unique_ids([s.id for s in self.items], f"mono corpus {self.name!r}")
        langs = {s.lang for s in self.items}
        if len(langs) > 1:
            raise ContractError(f"mono corpus {self.name!r} mixes languages {sorted(langs)}")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def lang(self) -> str | None:
        return self.items[0].lang if self.items else None

    def ids(self) -> list[str]:
        return [s.id for s in self.items]

    def with_log(self, entry: str) -> "MonoCorpus":
        return replace(self, log=self.log + (entry,))


@dataclass(frozen=True)
class ParallelCorpus:
    """Ordered parallel corpus; all pairs share one translation direction."""

    items: tuple[SentencePair, ...]
    name: str = ""
    seed: int | None = None
    log: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "log", tuple(self.log))
        _check_unique_ids([p.id for p in self.items], f"parallel corpus {self.name!r}")
        directions = {p.direction for p in self.items}
        if len(directions) > 1:
            raise ContractError(f"parallel corpus {self.name!r} mixes directions {sorted(directions)}")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def direction(self) -> tuple[str, str] | None:
        return self.items[0].direction if self.items else None

    def ids(self) -> list[str]:
        return [p.id for p in self.items]

    def with_log(self, entry: str) -> "ParallelCorpus":
        return replace(self, log=self.log + (entry,))


Corpus = MonoCorpus | ParallelCorpus
