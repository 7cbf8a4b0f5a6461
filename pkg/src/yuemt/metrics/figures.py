"""Figure rendering for the report and training paths.

Figures are written next to the delimited outputs so a run directory is
self-contained: learning curves as line plots, score tables as per-metric
bar charts grouped by cluster.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from yuemt.metrics.report import ScoreTable

_CLUSTER_COLORS = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3")


def render_learning_curve(records, path: str | Path, title: str = "") -> Path:
    """Plot per-epoch dev scores; `records` is an iterable with .epoch and .dev_bleu."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    epochs = [r.epoch for r in records]
    scores = [r.dev_bleu for r in records]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(epochs, scores, marker="o", color=_CLUSTER_COLORS[0])
    ax.set_xlabel("epoch")
    ax.set_ylabel("dev SacreBLEU")
    ax.set_title(title or "Learning curve")
    ax.grid(True, alpha=0.3)
    if epochs:
        ax.set_xticks(epochs)
        peak = max(range(len(scores)), key=scores.__getitem__)
        ax.annotate(
            f"peak {scores[peak]:.2f}",
            xy=(epochs[peak], scores[peak]),
            xytext=(5, 5),
            textcoords="offset points",
            fontsize=9,
        )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_score_figure(table: ScoreTable, path: str | Path, title: str = "") -> Path:
    """One bar-chart panel per metric; systems grouped and colored by cluster,
    best-in-cluster bars hatched."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    metrics = table.metrics
    clusters = table.clusters()
    color_of = {c: _CLUSTER_COLORS[k % len(_CLUSTER_COLORS)] for k, c in enumerate(clusters)}

    fig, axes = plt.subplots(
        len(metrics), 1, figsize=(max(6, 0.9 * len(table.rows) + 2), 2.6 * len(metrics)),
        squeeze=False,
    )
    for m_idx, metric in enumerate(metrics):
        ax = axes[m_idx][0]
        labels, values, colors, hatches = [], [], [], []
        for i, row in enumerate(table.rows):
            value = row.get(metric)
            labels.append(row.system)
            values.append(0.0 if value is None else value)
            colors.append(color_of[row.cluster] if value is not None else "#cccccc")
            hatches.append("//" if value is not None and table.is_best(i, metric) else "")
        bars = ax.bar(range(len(labels)), values, color=colors)
        for bar, hatch in zip(bars, hatches):
            if hatch:
                bar.set_hatch(hatch)
        ax.set_ylabel(metric)
        ax.set_xticks(range(len(labels)))
        if m_idx == len(metrics) - 1:
            ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
        else:
            ax.set_xticklabels([])
        ax.grid(True, axis="y", alpha=0.3)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
