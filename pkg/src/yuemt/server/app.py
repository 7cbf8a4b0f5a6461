"""Translation REST API.

Endpoints (JSON, schema_version 1):
  GET  /healthz                         liveness probe
  GET  /models?type=<base>&source=<l>   registered descriptors, filterable
  POST /translate                       {model_type, training_category,
                                         source_lang, target_lang, text}

Listing never loads a model; translation goes through the LRU ModelManager
so repeat requests against a resident model skip the load. Backend failures
surface as 5xx with an opaque error id; internals are only logged.
"""

from __future__ import annotations

import logging
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from yuemt.backends.base import TranslationRequest
from yuemt.backends.descriptors import BASES, parse_descriptor
from yuemt.backends.registry import ModelRegistry
from yuemt.corpus.types import LANG_TAGS
from yuemt.errors import ContractError, DescriptorError
from yuemt.server.manager import ModelManager

SCHEMA_VERSION = 1

logger = logging.getLogger("yuemt.server")


@dataclass(frozen=True)
class ServerConfig:
    registry_path: str | Path
    host: str = "127.0.0.1"
    port: int = 8900
    capacity: int = 2
    max_input_chars: int = 2000
    max_batch: int = 64
    cors_origins: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.capacity < 1:
            raise ContractError("capacity must be >= 1")
        if self.max_input_chars < 1 or self.max_batch < 1:
            raise ContractError("request limits must be positive")


class TranslateBody(BaseModel):
    model_config = {"protected_namespaces": ()}

    model_type: str
    training_category: str
    source_lang: str
    target_lang: str
    text: str
    schema_version: int = SCHEMA_VERSION


def _error(status: int, message: str, **extra) -> JSONResponse:
    payload = {"schema_version": SCHEMA_VERSION, "error": message}
    payload.update(extra)
    return JSONResponse(status_code=status, content=payload)


def create_app(
    config: ServerConfig,
    registry: ModelRegistry | None = None,
    manager: ModelManager | None = None,
) -> FastAPI:
    registry = registry or ModelRegistry(config.registry_path)
    manager = manager or ModelManager(
        capacity=config.capacity,
        loader=lambda key: registry.load_backend(parse_descriptor(key)),
    )

    app = FastAPI(title="yuemt translation server")
    app.state.registry = registry
    app.state.manager = manager
    app.state.config = config

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.get("/healthz")
    def healthz():
        return {"schema_version": SCHEMA_VERSION, "status": "ok"}

    @app.get("/models")
    def list_models(
        type: str | None = Query(default=None),
        source: str | None = Query(default=None),
    ):
        if type is not None and type not in BASES:
            return _error(400, f"unknown model type {type!r}", allowed=list(BASES))
        if source is not None and source not in LANG_TAGS:
            return _error(400, f"unknown source language {source!r}", allowed=list(LANG_TAGS))
        descriptors = registry.list(base=type, source_lang=source)
        logger.info("list_models type=%s source=%s -> %d", type, source, len(descriptors))
        return {
            "schema_version": SCHEMA_VERSION,
            "models": [d.as_dict() for d in descriptors],
        }

    @app.post("/translate")
    def translate(body: TranslateBody, request: Request):
        if len(body.text) > config.max_input_chars:
            return _error(
                413,
                f"input exceeds limit of {config.max_input_chars} characters",
                limit=config.max_input_chars,
            )
        try:
            descriptor, _ = registry.resolve(
                body.model_type, body.training_category, (body.source_lang, body.target_lang)
            )
        except DescriptorError as exc:
            return _error(404, str(exc))

        try:
            backend = manager.acquire(descriptor.key)
            result = backend.translate_batch(
                TranslationRequest(
                    sentences=(body.text,), direction=(body.source_lang, body.target_lang)
                )
            )
        except Exception as exc:
            error_id = uuid.uuid4().hex[:12]
            logger.error("translate failed id=%s model=%s: %s", error_id, descriptor.key, exc)
            return _error(500, "translation backend failure", error_id=error_id)

        logger.info(
            "translate model=%s chars=%d latency_ms=%.2f",
            descriptor.key,
            len(body.text),
            result.latency_ms,
        )
        return {
            "schema_version": SCHEMA_VERSION,
            "translation": result.sentences[0],
            "model": descriptor.as_dict(),
            "latency_ms": result.latency_ms,
        }

    return app


def serve(config: ServerConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port)
