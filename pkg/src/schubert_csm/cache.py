"""Content-addressed table cache: JSON payloads under a cache directory.

Cache keys combine (k, n, kind, order strategy, engine) with the package
version; a stale version stamp invalidates the entry. Writes are atomic via
temp-file rename, and a hit returns the stored payload byte-identically.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

ENV_CACHE_DIR = "CSM_CACHE_DIR"


def _version() -> str:
    from . import __version__

    return __version__


def cache_path(cache_dir: str | Path, key: dict) -> Path:
    canonical = json.dumps(key, sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(canonical.encode()).hexdigest()[:24]
    return Path(cache_dir) / f"{digest}.json"


def get_or_compute(cache_dir: str | Path | None, key: dict, compute: Callable[[], str]) -> str:
    """Return the cached payload for key, computing and storing it on a miss."""
    if cache_dir is None:
        cache_dir = os.environ.get(ENV_CACHE_DIR)
    if not cache_dir:
        return compute()
    path = cache_path(cache_dir, key)
    if path.exists():
        try:
            entry = json.loads(path.read_text())
            if entry.get("version") == _version() and entry.get("key") == key:
                return entry["payload"]
        except (json.JSONDecodeError, KeyError, OSError):
            pass  # corrupt entry: recompute below
    payload = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    entry = {"version": _version(), "key": key, "payload": payload}
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return payload
