"""Append-only JSON-lines result cache keyed by canonical graph key,
pattern, and budget class.

Lookup rules: a found or none-exists verdict is definitive and always
reusable; a budget-exceeded verdict is reusable only when the cached budget
covers the requested one, so enlarging the budget forces recomputation and
a none-exists entry is never displaced by a budget-exceeded one. Corrupt
lines are skipped with a warning, never fatal.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import logging
import os
import time
from dataclasses import dataclass
from typing import Callable

from .canonical import canonical_key
from .graph import Graph
from .patterns import Pattern
from .solver import BUDGET_EXCEEDED, Budget

logger = logging.getLogger(__name__)

ENV_VAR = "RAINSAT_CACHE"


def cache_path_from_env() -> str | None:
    return os.environ.get(ENV_VAR)


@dataclass
class CacheEntry:
    graph_key: str
    pattern: str
    task: str
    budget: dict
    verdict: str
    witness_digest: str | None
    timestamp: float

    def to_json(self) -> dict:
        return {
            "graph_key": self.graph_key,
            "pattern": self.pattern,
            "task": self.task,
            "budget": self.budget,
            "verdict": self.verdict,
            "witness_digest": self.witness_digest,
            "timestamp": self.timestamp,
        }


def witness_digest(coloring: tuple[int, ...] | None) -> str | None:
    if coloring is None:
        return None
    return hashlib.sha256(",".join(map(str, coloring)).encode()).hexdigest()[:16]


def _budget_covers(cached: dict, requested: Budget | None) -> bool:
    cb = Budget(max_nodes=cached.get("max_nodes"), max_ms=cached.get("max_ms"))
    return cb.covers(requested or Budget())


def _read_entries(path: str) -> list[dict]:
    entries = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    if not isinstance(obj, dict) or "verdict" not in obj:
                        raise ValueError("not a cache entry")
                    entries.append(obj)
                except ValueError:
                    logger.warning("skipping corrupt cache line %d in %s", lineno, path)
    except FileNotFoundError:
        pass
    return entries


def _append_entry(path: str, entry: CacheEntry) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        fh.write(json.dumps(entry.to_json()) + "\n")
        fh.flush()
        fcntl.flock(fh, fcntl.LOCK_UN)


def cache_lookup_or_run(
    path: str | None,
    g: Graph,
    pat: Pattern,
    task: str,
    budget: Budget | None,
    runner: Callable[[], tuple[str, tuple[int, ...] | None]],
) -> tuple[str, tuple[int, ...] | None, bool]:
    """Return (verdict, witness coloring or None, cache_hit). With no cache
    path the runner is invoked directly. Cache hits return the stored
    verdict without a witness coloring (only its digest is kept)."""
    if path is None:
        verdict, witness = runner()
        return verdict, witness, False
    gkey = canonical_key(g).hex()
    pkey = str(pat)
    for obj in _read_entries(path):
        if obj.get("graph_key") != gkey or obj.get("pattern") != pkey or obj.get("task") != task:
            continue
        verdict = obj["verdict"]
        if verdict != BUDGET_EXCEEDED and verdict != "inconclusive":
            return verdict, None, True
        if _budget_covers(obj.get("budget", {}), budget):
            return verdict, None, True
    verdict, witness = runner()
    b = budget or Budget()
    entry = CacheEntry(
        graph_key=gkey,
        pattern=pkey,
        task=task,
        budget={"max_nodes": b.max_nodes, "max_ms": b.max_ms},
        verdict=verdict,
        witness_digest=witness_digest(witness),
        timestamp=time.time(),
    )
    _append_entry(path, entry)
    return verdict, witness, False
