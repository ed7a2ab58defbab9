"""File-based cache for exact solver results."""

import hashlib
import json
import logging
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any

from ..models.config import CacheSettings
from ..models.graph import Graph

logger = logging.getLogger(__name__)


def result_key(g: Graph, number: str, max_elements: int) -> str:
    """Cache key for one exact computation on ``g``.

    The key depends on the canonical edge list, the requested number and the
    size cap, so raising the cap never serves a result computed under another.
    """
    digest = hashlib.sha256()
    digest.update(f"{g.n}\n".encode())
    for u, v in g.edges:
        digest.update(f"{u} {v}\n".encode())
    return f"{number}_{max_elements}_{digest.hexdigest()[:32]}"


class Cache:
    """JSON files under one directory, each with a ``.meta`` timestamp sidecar.

    ``ttl_minutes=None`` keeps entries forever: exact numbers do not go stale.
    """

    def __init__(self, cache_dir: Path | str = ".cache/tpconn", ttl_minutes: int | None = None):
        self.cache_dir = Path(cache_dir)
        self.ttl = None if ttl_minutes is None else timedelta(minutes=ttl_minutes)
        self._enabled = True

        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            marker = self.cache_dir / ".writable"
            marker.touch()
            marker.unlink()
        except OSError as e:
            logger.warning(f"Cache disabled - cannot write to {cache_dir}: {e}")
            self._enabled = False

    @classmethod
    def from_settings(cls, settings: CacheSettings) -> "Cache | None":
        if not settings.enabled:
            return None
        return cls(settings.directory, settings.ttl_minutes)

    @property
    def enabled(self) -> bool:
        return self._enabled

    def _path(self, key: str, suffix: str) -> Path:
        safe_key = "".join(c if c.isalnum() else "_" for c in key)
        return self.cache_dir / f"{safe_key}{suffix}"

    def get(self, key: str) -> dict[str, Any] | None:
        """Cached value, or ``None`` when missing, expired or unreadable."""
        if not self._enabled:
            return None

        path = self._path(key, ".json")
        meta_path = self._path(key, ".meta")
        if not path.exists() or not meta_path.exists():
            return None

        try:
            with open(meta_path) as f:
                cached_at = datetime.fromisoformat(json.load(f)["cached_at"])
            if self.ttl is not None and datetime.now() - cached_at > self.ttl:
                logger.debug(f"Cache expired for {key}")
                return None
            with open(path) as f:
                value = json.load(f)
        except (json.JSONDecodeError, KeyError, ValueError) as e:
            logger.warning(f"Failed to read cache for {key}: {e}")
            return None

        if not isinstance(value, dict):
            logger.warning(f"Ignoring malformed cache entry {key}")
            return None
        logger.debug(f"Cache hit for {key}")
        return value

    def set(self, key: str, value: dict[str, Any]) -> None:
        if not self._enabled:
            return

        try:
            with open(self._path(key, ".json"), "w") as f:
                json.dump(value, f)
            with open(self._path(key, ".meta"), "w") as f:
                json.dump({"cached_at": datetime.now().isoformat()}, f)
            logger.debug(f"Cached {key}")
        except (TypeError, OSError) as e:
            logger.warning(f"Failed to cache {key}: {e}")

    def clear(self, key: str) -> None:
        if not self._enabled:
            return
        self._path(key, ".json").unlink(missing_ok=True)
        self._path(key, ".meta").unlink(missing_ok=True)

    def clear_all(self) -> None:
        if not self._enabled:
            return
        for pattern in ("*.json", "*.meta"):
            for path in self.cache_dir.glob(pattern):
                path.unlink(missing_ok=True)
