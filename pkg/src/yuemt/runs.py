"""Run directories: every CLI invocation writes its outputs into one
directory together with a manifest recording the resolved config, seeds,
and content hashes of inputs and outputs, so any artifact can be re-derived
from its manifest alone.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import json
from pathlib import Path


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


class RunDir:
    def __init__(self, path: str | Path, subcommand: str, config: dict):
        self.path = Path(path)
        self.path.mkdir(parents=True, exist_ok=True)
        self.subcommand = subcommand
        self.config = config
        self.inputs: dict[str, str] = {}
        self.outputs: dict[str, str] = {}
        self.extra: dict = {}
        self.started = _dt.datetime.now(_dt.timezone.utc).isoformat()

    def record_input(self, path: str | Path) -> None:
        path = Path(path)
        if path.exists() and path.is_file():
            self.inputs[str(path)] = sha256_file(path)

    def record_output(self, path: str | Path) -> None:
        path = Path(path)
        if path.exists() and path.is_file():
            self.outputs[str(path)] = sha256_file(path)

    def file(self, name: str) -> Path:
        return self.path / name

    def write_json(self, name: str, payload) -> Path:
        target = self.path / name
        target.write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
        self.record_output(target)
        return target

    def finish(self) -> Path:
        manifest = {
            "tool": "yuemt",
            "subcommand": self.subcommand,
            "config": self.config,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "started": self.started,
            "finished": _dt.datetime.now(_dt.timezone.utc).isoformat(),
        }
        manifest.update(self.extra)
        target = self.path / "manifest.json"
        target.write_text(
            json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
        return target
