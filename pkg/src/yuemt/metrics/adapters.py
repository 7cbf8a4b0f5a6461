"""Adapters for embedding-based metrics (BERTScore, COMET, ...).

These scorers are model-defined, so they are never reimplemented here; the
toolkit talks to a reference scorer over a JSONL contract and records which
adapter (id + version) produced every number.

Wire contract, one JSON object per line, schema_version 1:
  request   {"schema_version": 1, "hyp": "...", "ref": "..."}
  response  {"score": <float>}        (same order and count as requests)

Transports: a subprocess that reads requests on stdin and writes responses
to stdout, or an HTTP endpoint accepting the request lines as a text body
and answering with response lines.
"""

from __future__ import annotations

import json
import subprocess
from dataclasses import dataclass
from statistics import fmean
from typing import Callable, Protocol

import httpx

from yuemt.errors import AdapterUnavailableError

SCHEMA_VERSION = 1


class MetricAdapter(Protocol):
    adapter_id: str
    version: str

    def score_segments(self, pairs: list[tuple[str, str]]) -> list[float]:
        ...


@dataclass(frozen=True)
class EmbeddingScores:
    adapter_id: str
    version: str
    segments: tuple[float, ...]
    corpus: float


def _request_lines(pairs: list[tuple[str, str]]) -> str:
    return "".join(
        json.dumps({"schema_version": SCHEMA_VERSION, "hyp": hyp, "ref": ref},
                   ensure_ascii=False) + "\n"
        for hyp, ref in pairs
    )


def _parse_scores(text: str, expected: int, adapter_id: str) -> list[float]:
    scores = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        record = json.loads(line)
        scores.append(float(record["score"]))
    if len(scores) != expected:
        raise AdapterUnavailableError(
            f"adapter {adapter_id!r} returned {len(scores)} scores for {expected} pairs"
        )
    return scores


@dataclass
class CallableAdapter:
    """In-process adapter, mainly for tests and custom scorers."""

    adapter_id: str
    version: str
    fn: Callable[[str, str], float]

    def score_segments(self, pairs: list[tuple[str, str]]) -> list[float]:
        return [float(self.fn(hyp, ref)) for hyp, ref in pairs]


@dataclass
class SubprocessAdapter:
    """Runs a scorer command once per batch, JSONL on stdin/stdout."""

    adapter_id: str
    version: str
    command: tuple[str, ...]
    timeout: float = 300.0

    def score_segments(self, pairs: list[tuple[str, str]]) -> list[float]:
        try:
            proc = subprocess.run(
                list(self.command),
                input=_request_lines(pairs),
                capture_output=True,
                text=True,
                timeout=self.timeout,
            )
        except (OSError, subprocess.TimeoutExpired) as exc:
            raise AdapterUnavailableError(f"adapter {self.adapter_id!r}: {exc}") from exc
        if proc.returncode != 0:
            raise AdapterUnavailableError(
                f"adapter {self.adapter_id!r} exited {proc.returncode}: {proc.stderr.strip()[:200]}"
            )
        return _parse_scores(proc.stdout, len(pairs), self.adapter_id)


@dataclass
class HttpAdapter:
    """POSTs the request lines to a scoring endpoint returning response lines."""

    adapter_id: str
    version: str
    url: str
    timeout: float = 300.0
    transport: httpx.BaseTransport | None = None

    def score_segments(self, pairs: list[tuple[str, str]]) -> list[float]:
        try:
            with httpx.Client(transport=self.transport, timeout=self.timeout) as client:
                response = client.post(
                    self.url,
                    content=_request_lines(pairs).encode("utf-8"),
                    headers={"content-type": "application/x-ndjson"},
                )
                response.raise_for_status()
        except httpx.HTTPError as exc:
            raise AdapterUnavailableError(f"adapter {self.adapter_id!r}: {exc}") from exc
        return _parse_scores(response.text, len(pairs), self.adapter_id)


def embedding_metric_score(
    adapter: MetricAdapter, hyps: list[str], refs: list[str]
) -> EmbeddingScores:
    """Score hyp/ref pairs through an adapter; corpus score is the segment mean."""
    if len(hyps) != len(refs):
        raise AdapterUnavailableError("hypothesis/reference count mismatch")
    pairs = list(zip(hyps, refs))
    segments = adapter.score_segments(pairs)
    return EmbeddingScores(
        adapter_id=adapter.adapter_id,
        version=adapter.version,
        segments=tuple(segments),
        corpus=fmean(segments) if segments else 0.0,
    )
