"""External inference adapter: drive any translation runtime over JSONL.

The core stays free of ML-framework coupling; a real neural model is served
by whatever process understands this contract. Per batch, the adapter runs
the configured command, writes one request line per sentence on stdin, and
expects one response line per sentence on stdout, in order.

Wire format (schema_version 1):
  request   {"schema_version": 1, "index": 0, "text": "...",
             "source_lang": "yue", "target_lang": "en",
             "beam_size": 4, "max_length": 256}
  response  {"index": 0, "text": "..."}
"""

from __future__ import annotations

import json
import subprocess

from yuemt.backends.base import Backend, TranslationRequest
from yuemt.backends.descriptors import ModelDescriptor
from yuemt.errors import BackendError

SCHEMA_VERSION = 1


class ExternalProcessBackend(Backend):
    def __init__(self, descriptor: ModelDescriptor, command: list[str], timeout: float = 600.0):
        super().__init__(descriptor)
        self.command = list(command)
        self.timeout = timeout

    def _translate(self, sentences, request: TranslationRequest) -> list[str]:
        src, tgt = request.direction
        lines = "".join(
            json.dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "index": i,
                    "text": text,
                    "source_lang": src,
                    "target_lang": tgt,
                    "beam_size": request.beam_size,
                    "max_length": request.max_length,
                },
                ensure_ascii=False,
            )
            + "\n"
            for i, text in enumerate(sentences)
        )
        proc = subprocess.run(
            self.command, input=lines, capture_output=True, text=True, timeout=self.timeout
        )
        if proc.returncode != 0:
            raise BackendError(
                f"inference command exited {proc.returncode}: {proc.stderr.strip()[:200]}"
            )
        outputs: dict[int, str] = {}
        for line in proc.stdout.splitlines():
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            outputs[int(record["index"])] = str(record["text"])
        missing = [i for i in range(len(sentences)) if i not in outputs]
        if missing:
            raise BackendError(f"inference command returned no output for indices {missing[:5]}")
        return [outputs[i] for i in range(len(sentences))]
