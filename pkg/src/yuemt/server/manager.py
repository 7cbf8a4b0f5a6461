"""LRU model manager: bounds how many models stay loaded at once.

The resident set never exceeds capacity (in-flight loads reserve a slot),
the eviction victim is always the least-recently-used resident, and a
victim's resources are released before the replacement load runs, so peak
memory stays at capacity models. Loads are single-flight: concurrent
requests for the same non-resident model trigger one load and the rest
wait. All bookkeeping happens under one lock whose acquisition order is the
linearization order; an event log recorded under that lock lets tests
replay the history against a reference simulation.
"""

from __future__ import annotations

import threading
from collections import Counter, OrderedDict
from typing import Callable


class ModelManager:
    def __init__(
        self,
        capacity: int,
        loader: Callable[[str], object],
        record_events: bool = False,
    ):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self._loader = loader
        self._cond = threading.Condition()
        self._resident: OrderedDict[str, object] = OrderedDict()
        self._loading: set[str] = set()
        self.load_counts: Counter[str] = Counter()
        self.eviction_counts: Counter[str] = Counter()
        self._record_events = record_events
        self.events: list[tuple[str, str]] = []
        self.max_observed_residents = 0

    def _log(self, op: str, key: str) -> None:
        if self._record_events:
            self.events.append((op, key))
        self.max_observed_residents = max(self.max_observed_residents, len(self._resident))

    def acquire(self, key: str):
        """Return the loaded model for `key`, loading (and evicting) if needed.

        Touches recency on a hit. On a loader failure the slot reservation
        is dropped and the error propagates; the failed model is never
        counted resident.
        """
        with self._cond:
            while True:
                if key in self._resident:
                    self._resident.move_to_end(key)
                    self._log("touch", key)
                    return self._resident[key]
                if key in self._loading:
                    self._cond.wait()
                    continue
                if len(self._resident) + len(self._loading) >= self.capacity:
                    if self._resident:
                        victim, model = self._resident.popitem(last=False)
                        self.eviction_counts[victim] += 1
                        self._log("evict", victim)
                        close = getattr(model, "close", None)
                        if close:
                            close()
                        continue
                    # Every slot is reserved by an in-flight load; wait.
                    self._cond.wait()
                    continue
                self._loading.add(key)
                break
        try:
            model = self._loader(key)
        except BaseException:
            with self._cond:
                self._loading.discard(key)
                self._cond.notify_all()
            raise
        with self._cond:
            self._loading.discard(key)
            self._resident[key] = model
            self._resident.move_to_end(key)
            self.load_counts[key] += 1
            self._log("load", key)
            self._cond.notify_all()
        return model

    def resident_keys(self) -> list[str]:
        """Resident keys from least to most recently used."""
        with self._cond:
            return list(self._resident.keys())

    def resident_count(self) -> int:
        with self._cond:
            return len(self._resident)


class LruReference:
    """Brute-force LRU simulation used as the test oracle."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.order: list[str] = []  # least recent first

    def access(self, key: str) -> None:
        if key in self.order:
            self.order.remove(key)
        elif len(self.order) >= self.capacity:
            self.order.pop(0)
        self.order.append(key)

    def replay(self, events: list[tuple[str, str]]) -> bool:
        """Check a manager event log against LRU semantics, step by step."""
        for op, key in events:
            if op == "touch":
                if key not in self.order:
                    return False
                self.order.remove(key)
                self.order.append(key)
            elif op == "evict":
                if not self.order or self.order[0] != key:
                    return False
                self.order.pop(0)
            elif op == "load":
                if key in self.order or len(self.order) >= self.capacity:
                    return False
                self.order.append(key)
            else:
                return False
        return True
