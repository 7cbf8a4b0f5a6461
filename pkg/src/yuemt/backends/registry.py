"""Model registry: a directory of JSON manifests, one per servable model.

Each manifest stores the descriptor fields plus backend parameters
(``params.kind`` selects the backend implementation: cipher, table, or
external). Writes are atomic file replaces so concurrent readers never see
a torn manifest.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from yuemt.backends.base import Backend
from yuemt.backends.descriptors import ModelDescriptor
from yuemt.backends.external import ExternalProcessBackend
from yuemt.backends.toy import CipherBackend, TableBackend, load_table
from yuemt.errors import DescriptorError, YuemtError


def _manifest_name(descriptor: ModelDescriptor) -> str:
    src, tgt = descriptor.direction
    return f"{descriptor.base}__{descriptor.training_category}__{src}-{tgt}.json"


class ModelRegistry:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def register(self, descriptor: ModelDescriptor, params: dict) -> Path:
        """Write (or atomically replace) the manifest for a descriptor."""
        self.root.mkdir(parents=True, exist_ok=True)
        manifest = {"descriptor": descriptor.as_dict(), "params": params}
        target = self.root / _manifest_name(descriptor)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(manifest, fh, ensure_ascii=False, indent=2)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return target

    def _iter_manifests(self):
        if not self.root.exists():
            raise YuemtError(f"registry directory {self.root} does not exist")
        if not self.root.is_dir():
            raise YuemtError(f"registry path {self.root} is not a directory")
        for path in sorted(self.root.glob("*.json")):
            try:
                manifest = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise YuemtError(f"unreadable manifest {path.name}: {exc}") from exc
            d = manifest["descriptor"]
            descriptor = ModelDescriptor(
                base=d["base"],
                training_category=d["training_category"],
                direction=(d["source_lang"], d["target_lang"]),
                path=d.get("path", ""),
                display_name=d.get("display_name", ""),
            )
            yield descriptor, manifest.get("params", {})

    def list(
        self,
        base: str | None = None,
        source_lang: str | None = None,
        direction: tuple[str, str] | None = None,
    ) -> list[ModelDescriptor]:
        """All registered descriptors matching the filters (omitted = wildcard),
        ordered by (base, training_category, direction)."""
        found = []
        for descriptor, _ in self._iter_manifests():
            if base is not None and descriptor.base != base:
                continue
            if source_lang is not None and descriptor.direction[0] != source_lang:
                continue
            if direction is not None and descriptor.direction != direction:
                continue
            found.append(descriptor)
        found.sort(key=lambda d: (d.base, d.training_category, d.direction))
        return found

    def resolve(
        self, base: str, training_category: str, direction: tuple[str, str]
    ) -> tuple[ModelDescriptor, dict]:
        for descriptor, params in self._iter_manifests():
            if (
                descriptor.base == base
                and descriptor.training_category == training_category
                and descriptor.direction == tuple(direction)
            ):
                return descriptor, params
        raise DescriptorError(
            f"no registered model {base}/{training_category}/{direction[0]}-{direction[1]}"
        )

    def load_backend(self, descriptor: ModelDescriptor) -> Backend:
        _, params = self.resolve(
            descriptor.base, descriptor.training_category, descriptor.direction
        )
        return build_backend(descriptor, params)


def build_backend(descriptor: ModelDescriptor, params: dict) -> Backend:
    kind = params.get("kind")
    if kind == "cipher":
        return CipherBackend(descriptor, seed=int(params["seed"]))
    if kind == "table":
        return TableBackend(descriptor, table=load_table(params["table_path"]))
    if kind == "external":
        return ExternalProcessBackend(
            descriptor,
            command=list(params["command"]),
            timeout=float(params.get("timeout", 600.0)),
        )
    raise DescriptorError(f"manifest for {descriptor.key} has unknown backend kind {kind!r}")


def list_backends(registry: ModelRegistry, **filters) -> list[ModelDescriptor]:
    return registry.list(**filters)
