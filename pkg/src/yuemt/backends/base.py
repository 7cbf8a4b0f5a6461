"""Translation backend abstraction.

A backend translates batches for exactly one descriptor. Calls to one
instance are serialized with an internal lock; distinct instances may run
concurrently. Requests and results are immutable values.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

from yuemt.backends.descriptors import ModelDescriptor
from yuemt.errors import BackendError, ContractError

DEFAULT_BEAM_SIZE = 4
DEFAULT_MAX_LENGTH = 256


@dataclass(frozen=True)
class TranslationRequest:
    sentences: tuple[str, ...]
    direction: tuple[str, str]
    beam_size: int = DEFAULT_BEAM_SIZE
    max_length: int = DEFAULT_MAX_LENGTH

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        if self.beam_size < 1 or self.max_length < 1:
            raise ContractError("beam_size and max_length must be positive")


@dataclass(frozen=True)
class TranslationResult:
    sentences: tuple[str, ...]
    latency_ms: float
    copied_through: tuple[int, ...] = ()


class Backend:
    """Base class wiring direction checks, 1:1 alignment, and the
    copy-through fallback around a subclass's _translate hook."""

    def __init__(self, descriptor: ModelDescriptor):
        self.descriptor = descriptor
        self._lock = threading.Lock()

    def _translate(self, sentences: tuple[str, ...], request: TranslationRequest) -> list[str]:
        raise NotImplementedError

    def translate_batch(self, request: TranslationRequest) -> TranslationResult:
        if request.direction != self.descriptor.direction:
            raise ContractError(
                f"request direction {request.direction} does not match "
                f"model {self.descriptor.key} ({self.descriptor.direction})"
            )
        if not request.sentences:
            return TranslationResult(sentences=(), latency_ms=0.0)
        with self._lock:
            started = time.perf_counter()
            try:
                outputs = self._translate(request.sentences, request)
            except Exception as exc:
                raise BackendError(f"backend {self.descriptor.key} failed: {exc}") from exc
            latency_ms = (time.perf_counter() - started) * 1000.0
        if len(outputs) != len(request.sentences):
            raise BackendError(
                f"backend {self.descriptor.key} returned {len(outputs)} outputs "
                f"for {len(request.sentences)} inputs"
            )
        copied = []
        final = []
        for i, (src, out) in enumerate(zip(request.sentences, outputs)):
            if src and not out:
                final.append(src)
                copied.append(i)
            else:
                final.append(out)
        return TranslationResult(
            sentences=tuple(final),
            latency_ms=latency_ms,
            copied_through=tuple(copied),
        )

    def close(self) -> None:
        """Release held resources; idempotent."""
