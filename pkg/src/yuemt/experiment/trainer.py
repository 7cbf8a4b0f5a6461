"""Trainer contract plus the two shipped implementations.

ToyTrainer learns a source-token -> target-token count table from
position-aligned pairs; translation is argmax lookup with copy-through.
Counts only ever grow, so adding consistent pairs never lowers any cell's
count. Deterministic for a given (state, corpus, seed).

ExternalCommandTrainer drives a real training runtime through a subprocess
contract (JSON request on stdin, JSON reply on stdout), keeping ML
frameworks out of the core while reusing the same orchestration loop:

  {"op": "init",        "seed": 7, "state_dir": "..."}
  {"op": "train_epoch", "state_dir": "...", "corpus_path": "...", "seed": 8}
  {"op": "translate",   "state_dir": "...", "texts": ["..."]}
    -> {"ok": true, "state_dir": "...", "texts": [...]}   (fields per op)
"""

from __future__ import annotations

import copy
import json
import shutil
import subprocess
import tempfile
from pathlib import Path
from typing import Protocol

from yuemt.backends.toy import argmax_target, load_table, save_table
from yuemt.corpus.io import save_corpus
from yuemt.corpus.types import ParallelCorpus
from yuemt.errors import ExperimentError


class TrainerInterface(Protocol):
    def init_state(self, seed: int): ...

    def train_epoch(self, state, corpus: ParallelCorpus, seed: int): ...

    def translate_batch(self, state, texts: list[str]) -> list[str]: ...

    def snapshot(self, state): ...

    def save(self, state, path: str | Path) -> Path: ...

    def backend_params(self, path: str | Path) -> dict: ...


class ToyTrainer:
    """Reference trainer over the toy token language."""

    def init_state(self, seed: int) -> dict[str, dict[str, int]]:
        return {}

    def train_epoch(
        self, state: dict[str, dict[str, int]], corpus: ParallelCorpus, seed: int
    ) -> dict[str, dict[str, int]]:
        state = copy.deepcopy(state)
        for pair in corpus:
            src_tokens = pair.source.text.split()
            tgt_tokens = pair.target.text.split()
            for src, tgt in zip(src_tokens, tgt_tokens):
                counts = state.setdefault(src, {})
                counts[tgt] = counts.get(tgt, 0) + 1
        return state

    def translate(self, state: dict[str, dict[str, int]], text: str) -> str:
        return " ".join(
            argmax_target(state[tok]) if state.get(tok) else tok for tok in text.split()
        )

    def translate_batch(self, state, texts: list[str]) -> list[str]:
        return [self.translate(state, text) for text in texts]

    def snapshot(self, state):
        return copy.deepcopy(state)

    def save(self, state, path: str | Path) -> Path:
        return save_table(state, path)

    @staticmethod
    def load(path: str | Path) -> dict[str, dict[str, int]]:
        return load_table(path)

    def backend_params(self, path: str | Path) -> dict:
        return {"kind": "table", "table_path": str(path)}


class ExternalCommandTrainer:
    """TrainerInterface over an external training command; state lives in a
    directory owned by the command."""

    def __init__(self, command: list[str], workdir: str | Path | None = None, timeout: float = 3600.0):
        self.command = list(command)
        self.workdir = Path(workdir) if workdir else Path(tempfile.mkdtemp(prefix="yuemt-ext-"))
        self.timeout = timeout
        self._counter = 0

    def _call(self, payload: dict) -> dict:
        proc = subprocess.run(
            self.command,
            input=json.dumps(payload) + "\n",
            capture_output=True,
            text=True,
            timeout=self.timeout,
        )
        if proc.returncode != 0:
            raise ExperimentError(
                f"training command exited {proc.returncode}: {proc.stderr.strip()[:200]}"
            )
        reply = json.loads(proc.stdout.strip().splitlines()[-1])
        if not reply.get("ok", False):
            raise ExperimentError(f"training command error: {reply.get('error', 'unknown')}")
        return reply

    def _new_state_dir(self) -> Path:
        self._counter += 1
        path = self.workdir / f"state-{self._counter:03d}"
        path.mkdir(parents=True, exist_ok=True)
        return str(path)

    def init_state(self, seed: int) -> str:
        state_dir = self._new_state_dir()
        self._call({"op": "init", "seed": seed, "state_dir": state_dir})
        return state_dir

    def train_epoch(self, state: str, corpus: ParallelCorpus, seed: int) -> str:
        corpus_path = self.workdir / f"epoch-corpus-{self._counter:03d}.jsonl"
        save_corpus(corpus, corpus_path)
        new_dir = self._new_state_dir()
        shutil.copytree(state, new_dir, dirs_exist_ok=True)
        self._call(
            {"op": "train_epoch", "state_dir": new_dir, "corpus_path": str(corpus_path), "seed": seed}
        )
        return new_dir

    def translate_batch(self, state: str, texts: list[str]) -> list[str]:
        reply = self._call({"op": "translate", "state_dir": state, "texts": list(texts)})
        return [str(t) for t in reply["texts"]]

    def snapshot(self, state: str) -> str:
        new_dir = self._new_state_dir()
        shutil.copytree(state, new_dir, dirs_exist_ok=True)
        return new_dir

    def save(self, state: str, path: str | Path) -> Path:
        path = Path(path)
        if path.exists():
            shutil.rmtree(path)
        shutil.copytree(state, path)
        return path

    def backend_params(self, path: str | Path) -> dict:
        return {"kind": "external", "command": self.command + ["--serve", str(path)]}
