"""On-disk cache of JSON results keyed by operation and canonical parameters.

One file per key, stored under a two-level fan-out of the key's sha256.
Writes go to a temporary file in the target directory followed by
``os.replace`` so concurrent readers never observe partial entries.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from pathlib import Path
from typing import Any, Callable

from . import __version__

__all__ = ["ResultCache", "canonical_json", "cache_key", "default_cache_dir", "CACHE_ENV", "CACHE_VERSION"]

CACHE_ENV = "ROBIN_SPECTRA_CACHE"
CACHE_VERSION = f"{__version__}/1"


def canonical_json(obj: Any) -> str:
    """Sorted keys, no whitespace, floats in shortest round-trip form."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def cache_key(operation: str, params: dict) -> str:
    return hashlib.sha256(canonical_json({"op": operation, "params": params}).encode()).hexdigest()


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "robin-spectra"


class ResultCache:
    """JSON result cache; ``enabled=False`` bypasses both reads and writes."""

    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True, version: str = CACHE_VERSION):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled
        self.version = version
        self.writable = enabled
        self.hits = 0
        self.misses = 0

    def path_for(self, key: str) -> Path:
        return self.directory / key[:2] / key[2:4] / f"{key}.json"

    def get(self, key: str) -> Any | None:
        if not self.enabled:
            return None
        try:
            with open(self.path_for(key), encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, ValueError):
            return None
        if not isinstance(entry, dict) or entry.get("version") != self.version or entry.get("key") != key:
            return None
        return entry.get("value")

    def put(self, key: str, value: Any, operation: str = "", params: dict | None = None) -> bool:
        if not (self.enabled and self.writable):
            return False
        path = self.path_for(key)
        entry = {"version": self.version, "key": key, "op": operation, "params": params, "value": value}
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    # key order of the value is preserved; only the key is canonical
                    fh.write(json.dumps(entry, separators=(",", ":"), allow_nan=False))
                os.replace(tmp, path)
            except BaseException:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
                raise
        except OSError as exc:
            self.writable = False
            warnings.warn(f"cache directory {self.directory} is not writable ({exc}); continuing without caching", RuntimeWarning, stacklevel=2)
            return False
        return True

    def roundtrip(self, operation: str, params: dict, compute: Callable[[], Any]) -> tuple[Any, bool]:
        """Return ``(value, hit)``; on a miss compute, store and return."""
        key = cache_key(operation, params)
        value = self.get(key)
        if value is not None:
            self.hits += 1
            return value, True
        self.misses += 1
        value = compute()
        self.put(key, value, operation, params)
        return value, False
