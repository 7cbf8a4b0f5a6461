"""Synthetic parallel data generation: translate a monolingual corpus with a
chosen backend, batch by batch, with checkpointed resume.

Every output pair keeps the source sentence verbatim (same id, same text),
is tagged provenance=synthetic, and names the generator model. With a
checkpoint directory, finished batches are appended to a partial JSONL file
next to a resume token, so an interrupted run restarts at batch granularity
instead of silently truncating or redoing work.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from yuemt.backends.base import Backend, TranslationRequest
from yuemt.corpus.types import (
    PROVENANCE_SYNTHETIC,
    MonoCorpus,
    ParallelCorpus,
    Sentence,
    SentencePair,
)
from yuemt.errors import BackendError, ContractError

_PARTIAL_NAME = "partial.jsonl"
_TOKEN_NAME = "resume.json"


def _fingerprint(mono: MonoCorpus, generator_key: str) -> str:
    digest = hashlib.sha256()
    digest.update(generator_key.encode("utf-8"))
    for sentence in mono:
        digest.update(sentence.id.encode("utf-8"))
        digest.update(b"\x00")
        digest.update(sentence.text.encode("utf-8"))
        digest.update(b"\x01")
    return digest.hexdigest()


def _load_partial(checkpoint_dir: Path, fingerprint: str) -> tuple[int, list[str]]:
    token_path = checkpoint_dir / _TOKEN_NAME
    partial_path = checkpoint_dir / _PARTIAL_NAME
    if not token_path.exists() or not partial_path.exists():
        return 0, []
    token = json.loads(token_path.read_text(encoding="utf-8"))
    if token.get("fingerprint") != fingerprint:
        return 0, []
    translations = []
    for line in partial_path.read_text(encoding="utf-8").splitlines():
        if line.strip():
            translations.append(json.loads(line)["tgt"])
    done = int(token.get("next_index", 0))
    if len(translations) != done:
        return 0, []
    return done, translations


def _append_batch(checkpoint_dir: Path, batch: list[str], next_index: int, fingerprint: str) -> None:
    checkpoint_dir.mkdir(parents=True, exist_ok=True)
    with open(checkpoint_dir / _PARTIAL_NAME, "a", encoding="utf-8") as fh:
        for text in batch:
            fh.write(json.dumps({"tgt": text}, ensure_ascii=False) + "\n")
    token = {"next_index": next_index, "fingerprint": fingerprint}
    (checkpoint_dir / _TOKEN_NAME).write_text(
        json.dumps(token, ensure_ascii=False) + "\n", encoding="utf-8"
    )


def backtranslate(
    mono: MonoCorpus,
    backend: Backend,
    batch_size: int = 32,
    checkpoint_dir: str | Path | None = None,
) -> ParallelCorpus:
    """Translate every sentence of `mono` with `backend` into synthetic pairs.

    Output order matches input order and |output| == |mono|. On a backend
    failure the finished batches stay persisted (when a checkpoint_dir is
    given) and the error propagates.
    """
    descriptor = backend.descriptor
    src_lang, tgt_lang = descriptor.direction
    if mono.lang is not None and mono.lang != src_lang:
        raise ContractError(
            f"mono corpus is {mono.lang!r} but model {descriptor.key} translates from {src_lang!r}"
        )
    if batch_size < 1:
        raise ContractError("batch_size must be >= 1")

    generator_key = descriptor.key
    sentences = list(mono.items)
    translations: list[str] = []
    start = 0
    fingerprint = ""
    checkpoint_path = Path(checkpoint_dir) if checkpoint_dir else None
    if checkpoint_path:
        fingerprint = _fingerprint(mono, generator_key)
        start, translations = _load_partial(checkpoint_path, fingerprint)

    for begin in range(start, len(sentences), batch_size):
        batch = sentences[begin:begin + batch_size]
        request = TranslationRequest(
            sentences=tuple(s.text for s in batch), direction=(src_lang, tgt_lang)
        )
        try:
            result = backend.translate_batch(request)
        except BackendError:
            # Finished batches are already on disk; the resume token points
            # at the first untranslated sentence.
            raise
        outputs = list(result.sentences)
        translations.extend(outputs)
        if checkpoint_path:
            _append_batch(checkpoint_path, outputs, begin + len(batch), fingerprint)

    pairs = tuple(
        SentencePair(
            source=sentence,
            target=Sentence(id=sentence.id, text=text, lang=tgt_lang),
            provenance=PROVENANCE_SYNTHETIC,
            generator=generator_key,
        )
        for sentence, text in zip(sentences, translations)
    )
    return ParallelCorpus(
        items=pairs,
        name=f"{mono.name}-syn",
        seed=mono.seed,
        log=mono.log
        + (f"backtranslate(model={generator_key}, batch_size={batch_size}, n={len(pairs)})",),
    )
