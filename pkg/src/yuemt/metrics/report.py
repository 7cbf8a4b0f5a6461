"""Score tables: per-system metric rows grouped into clusters, with the best
score per (cluster, metric) flagged. Renders to records, TSV, and an aligned
text table where best-in-cluster scores are marked with '*'.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from yuemt.errors import ContractError

METRIC_COLUMNS = ("sacrebleu", "hlepor", "bertscore", "comet")


@dataclass(frozen=True)
class ScoreRow:
    system: str
    cluster: str
    scores: dict[str, float | None] = field(default_factory=dict)

    def get(self, metric: str) -> float | None:
        return self.scores.get(metric)


@dataclass(frozen=True)
class ScoreTable:
    rows: tuple[ScoreRow, ...]
    metrics: tuple[str, ...]
    # (cluster, metric) -> indices into rows that hold the cluster maximum
    best: dict[tuple[str, str], frozenset[int]]

    def clusters(self) -> list[str]:
        seen: list[str] = []
        for row in self.rows:
            if row.cluster not in seen:
                seen.append(row.cluster)
        return seen

    def is_best(self, index: int, metric: str) -> bool:
        return index in self.best.get((self.rows[index].cluster, metric), frozenset())

    def to_records(self) -> list[dict]:
        records = []
        for i, row in enumerate(self.rows):
            record: dict = {"system": row.system, "cluster": row.cluster}
            for metric in self.metrics:
                value = row.get(metric)
                record[metric] = value
                record[f"{metric}_best"] = self.is_best(i, metric) if value is not None else False
            records.append(record)
        return records

    def to_tsv(self) -> str:
        header = ["system", "cluster"] + [m for metric in self.metrics for m in (metric, f"{metric}_best")]
        lines = ["\t".join(header)]
        for record in self.to_records():
            cells = [record["system"], record["cluster"]]
            for metric in self.metrics:
                value = record[metric]
                cells.append("n/a" if value is None else f"{value:.4f}")
                cells.append(str(record[f"{metric}_best"]).lower())
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_records(), ensure_ascii=False, indent=2) + "\n"

    def render_text(self) -> str:
        """Aligned table, one block per cluster, best scores starred."""
        width = max([len("system")] + [len(r.system) for r in self.rows])
        cols = {m: max(len(m), 10) for m in self.metrics}
        out: list[str] = []
        header = "system".ljust(width) + "".join(f"  {m.rjust(cols[m])}" for m in self.metrics)
        rule = "-" * len(header)
        for cluster in self.clusters():
            out.append(f"[{cluster}]")
            out.append(header)
            out.append(rule)
            for i, row in enumerate(self.rows):
                if row.cluster != cluster:
                    continue
                cells = []
                for metric in self.metrics:
                    value = row.get(metric)
                    if value is None:
                        cell = "n/a"
                    else:
                        cell = f"{value:.2f}" + ("*" if self.is_best(i, metric) else "")
                    cells.append(cell.rjust(cols[metric]))
                out.append(row.system.ljust(width) + "".join(f"  {c}" for c in cells))
            out.append("")
        return "\n".join(out)


def build_score_table(
    rows: list[ScoreRow], metrics: tuple[str, ...] | None = None
) -> ScoreTable:
    """Group rows by cluster and flag the per-(cluster, metric) maxima.

    Ties flag every maximum; rows with a missing (None) value never carry a
    flag. Row order is preserved within clusters.
    """
    if not rows:
        raise ContractError("score table needs at least one row")
    if metrics is None:
        named = [m for m in METRIC_COLUMNS if any(m in r.scores for r in rows)]
        extra = sorted(
            {m for r in rows for m in r.scores if m not in METRIC_COLUMNS}
        )
        metrics = tuple(named + extra) or ("sacrebleu",)

    best: dict[tuple[str, str], frozenset[int]] = {}
    clusters = {row.cluster for row in rows}
    for cluster in clusters:
        indices = [i for i, r in enumerate(rows) if r.cluster == cluster]
        for metric in metrics:
            values = [(i, rows[i].get(metric)) for i in indices]
            present = [(i, v) for i, v in values if v is not None]
            if not present:
                best[(cluster, metric)] = frozenset()
                continue
            top = max(v for _, v in present)
            best[(cluster, metric)] = frozenset(i for i, v in present if v == top)

    return ScoreTable(rows=tuple(rows), metrics=tuple(metrics), best=best)
