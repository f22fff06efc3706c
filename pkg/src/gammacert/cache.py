"""On-disk cache of Bernoulli and Euler number tables.

File format (JSON)::

    {"schema_version": 1,
     "bernoulli": ["1", "-1/2", "1/6", ...],   # B_0..B_n
     "euler": ["1", "0", "-1", ...]}           # E_0..E_n

A cache that fails to parse, has the wrong version, or fails the defining
recurrences is ignored (with a warning) and rewritten.
"""
from __future__ import annotations

import json
import logging
import os
from fractions import Fraction
from pathlib import Path

from . import exact

__all__ = ["CACHE_SCHEMA_VERSION", "default_cache_path", "load_cache", "store_cache"]

CACHE_SCHEMA_VERSION = 1

log = logging.getLogger(__name__)


def default_cache_path() -> Path:
    env = os.environ.get("GAMMACERT_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "gammacert" / "tables.json"


def load_cache(path: os.PathLike | str) -> int:
    """Seed the in-memory tables from ``path``; returns the number of Bernoulli entries loaded."""
    path = Path(path)
    if not path.exists():
        return 0
    try:
        data = json.loads(path.read_text())
        if data.get("schema_version") != CACHE_SCHEMA_VERSION:
            raise ValueError(f"schema_version {data.get('schema_version')!r} != {CACHE_SCHEMA_VERSION}")
        bern = [Fraction(s) for s in data["bernoulli"]]
        eul = [int(s) for s in data["euler"]]
        exact.load_tables(bern, eul)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring cache %s: %s", path, exc)
        return 0
    return len(bern)


def store_cache(path: os.PathLike | str, n: int) -> bool:
    """Write B_0..B_n and E_0..E_n to ``path``; returns False (with a warning) if unwritable."""
    path = Path(path)
    data = {
        "schema_version": CACHE_SCHEMA_VERSION,
        "bernoulli": [str(b) for b in exact.bernoulli_table(n)],
        "euler": [str(e) for e in exact.euler_table(n)],
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(json.dumps(data, indent=1) + "\n")
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("cannot write cache %s: %s; tables stay in memory only", path, exc)
        return False
    return True
