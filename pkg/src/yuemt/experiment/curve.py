"""Per-epoch learning curves: dev scores recorded after every epoch, with
persistence so an aborted run leaves a usable prefix on disk."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from yuemt.errors import ContractError


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    dev_bleu: float
    wall_time_s: float
    extras: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        record = {"epoch": self.epoch, "dev_bleu": self.dev_bleu, "wall_time_s": self.wall_time_s}
        record.update(self.extras)
        return record


@dataclass(frozen=True)
class LearningCurve:
    records: tuple[EpochRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        for i, record in enumerate(self.records, start=1):
            if record.epoch != i:
                raise ContractError(
                    f"learning-curve epochs must be contiguous from 1; "
                    f"record {i} has epoch {record.epoch}"
                )

    def __len__(self) -> int:
        return len(self.records)

    def best_epoch(self) -> int:
        """Epoch with the highest dev score; ties break to the earliest epoch."""
        if not self.records:
            raise ContractError("empty learning curve has no best epoch")
        best = self.records[0]
        for record in self.records[1:]:
            if record.dev_bleu > best.dev_bleu:
                best = record
        return best.epoch

    def save(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"records": [r.as_dict() for r in self.records]}
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        return path

    @classmethod
    def load(cls, path: str | Path) -> "LearningCurve":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        records = []
        for raw in payload["records"]:
            extras = {
                k: v for k, v in raw.items() if k not in ("epoch", "dev_bleu", "wall_time_s")
            }
            records.append(
                EpochRecord(
                    epoch=int(raw["epoch"]),
                    dev_bleu=float(raw["dev_bleu"]),
                    wall_time_s=float(raw["wall_time_s"]),
                    extras=extras,
                )
            )
        return cls(records=tuple(records))
