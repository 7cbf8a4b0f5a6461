"""JSONL corpus serialization.

One record per line, UTF-8, NFC-normalized text, fixed key order and compact
separators so that serializing the same corpus twice is byte-identical.
Corpus metadata (name, seed, transformation log) lives in a sidecar
``<path>.meta.json`` so the data file stays plain one-record-per-line.
"""

from __future__ import annotations

import json
import os
import unicodedata
from pathlib import Path

from yuemt.corpus.types import (
    MonoCorpus,
    ParallelCorpus,
    Sentence,
    SentencePair,
)
from yuemt.errors import ParseError

_MONO_REQUIRED = ("id", "text", "lang")
_PARALLEL_REQUIRED = ("id", "src", "tgt", "src_lang", "tgt_lang", "provenance")


def _dump_line(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def _meta_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def save_corpus(corpus: MonoCorpus | ParallelCorpus, path: str | os.PathLike) -> Path:
    """Write a corpus as JSONL plus a sidecar metadata file. Returns the data path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    if isinstance(corpus, MonoCorpus):
        kind = "mono"
        for s in corpus:
            lines.append(_dump_line({"id": s.id, "text": s.text, "lang": s.lang}))
    else:
        kind = "parallel"
        for p in corpus:
            lines.append(
                _dump_line(
                    {
                        "id": p.id,
                        "src": p.source.text,
                        "tgt": p.target.text,
                        "src_lang": p.source.lang,
                        "tgt_lang": p.target.lang,
                        "provenance": p.provenance,
                        "generator": p.generator,
                    }
                )
            )
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
    meta = {
        "kind": kind,
        "name": corpus.name,
        "seed": corpus.seed,
        "log": list(corpus.log),
        "count": len(corpus),
    }
    _meta_path(path).write_text(
        json.dumps(meta, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    return path


def _parse_lines(path: Path):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if not isinstance(record, dict):
                raise ParseError("record is not an object", line=lineno)
            yield lineno, record


def _require(record: dict, fields: tuple[str, ...], lineno: int) -> None:
    for name in fields:
        if name not in record or record[name] is None:
            raise ParseError(f"missing required field {name!r}", line=lineno)


def _norm(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def load_mono(path: str | os.PathLike) -> MonoCorpus:
    path = Path(path)
    items = []
    for lineno, record in _parse_lines(path):
        _require(record, _MONO_REQUIRED, lineno)
        items.append(Sentence(id=str(record["id"]), text=_norm(record["text"]), lang=record["lang"]))
    meta = _load_meta(path)
    return MonoCorpus(items=tuple(items), **meta)


def load_parallel(path: str | os.PathLike) -> ParallelCorpus:
    path = Path(path)
    items = []
    for lineno, record in _parse_lines(path):
        _require(record, _PARALLEL_REQUIRED, lineno)
        pair_id = str(record["id"])
        items.append(
            SentencePair(
                source=Sentence(id=pair_id, text=_norm(record["src"]), lang=record["src_lang"]),
                target=Sentence(id=pair_id, text=_norm(record["tgt"]), lang=record["tgt_lang"]),
                provenance=record["provenance"],
                generator=record.get("generator"),
            )
        )
    meta = _load_meta(path)
    return ParallelCorpus(items=tuple(items), **meta)


def load_corpus(path: str | os.PathLike) -> MonoCorpus | ParallelCorpus:
    """Load either corpus kind, dispatching on the sidecar metadata or first record."""
    path = Path(path)
    meta_file = _meta_path(path)
    if meta_file.exists():
        kind = json.loads(meta_file.read_text(encoding="utf-8")).get("kind")
        if kind == "mono":
            return load_mono(path)
        if kind == "parallel":
            return load_parallel(path)
    for _, record in _parse_lines(path):
        return load_parallel(path) if "src" in record else load_mono(path)
    return MonoCorpus(items=(), name=path.stem)


def _load_meta(path: Path) -> dict:
    meta_file = _meta_path(path)
    if not meta_file.exists():
        return {"name": path.stem, "seed": None, "log": ()}
    meta = json.loads(meta_file.read_text(encoding="utf-8"))
    return {
        "name": meta.get("name", path.stem),
        "seed": meta.get("seed"),
        "log": tuple(meta.get("log", ())),
    }
