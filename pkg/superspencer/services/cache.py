"""Caching service for graded pairs and prolongation towers."""
import hashlib
import json
import logging
from typing import Any, Callable, Dict, Optional

logger = logging.getLogger(__name__)


class ComputationCache:
    """Simple in-memory cache for objects that are expensive to rebuild.

    Entries are keyed by a kind ("pair", "tower", ...) plus the case label and
    the parameters the object was built with. Cached objects must not be mutated
    by callers, except for towers, which only grow.
    """

    def __init__(self, max_entries: int = 64):
        """
        Initialize computation cache.

        Args:
            max_entries: Number of entries kept before the oldest is evicted
        """
        self.cache: Dict[str, Any] = {}
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def _get_cache_key(
        self,
        kind: str,
        label: str,
        params: Optional[Dict[str, Any]] = None,
    ) -> str:
        """Generate cache key from kind, label and parameters."""
        cache_data: Dict[str, Any] = {"kind": kind, "label": label}
        if params:
            cache_data.update(params)
        cache_str = json.dumps(cache_data, sort_keys=True, default=str)
        return hashlib.sha256(cache_str.encode()).hexdigest()

    def get(
        self,
        kind: str,
        label: str,
        params: Optional[Dict[str, Any]] = None,
    ) -> Optional[Any]:
        """
        Get a cached object.

        Args:
            kind: Object kind
            label: Case label
            params: Optional build parameters

        Returns:
            The cached object or None
        """
        entry = self.cache.get(self._get_cache_key(kind, label, params))
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        return entry

    def set(
        self,
        kind: str,
        label: str,
        value: Any,
        params: Optional[Dict[str, Any]] = None,
    ) -> None:
        """
        Store an object in cache.

        Args:
            kind: Object kind
            label: Case label
            value: Object to cache
            params: Optional build parameters
        """
        cache_key = self._get_cache_key(kind, label, params)
        if cache_key not in self.cache and len(self.cache) >= self.max_entries:
            oldest = next(iter(self.cache))
            del self.cache[oldest]
        self.cache[cache_key] = value

    def get_or_build(
        self,
        kind: str,
        label: str,
        build: Callable[[], Any],
        params: Optional[Dict[str, Any]] = None,
    ) -> Any:
        """Return the cached object, building and storing it on a miss."""
        value = self.get(kind, label, params)
        if value is None:
            value = build()
            self.set(kind, label, value, params)
            logger.debug(f"Cached {kind} for {label}")
        return value

    def clear(self) -> None:
        """Clear all cache entries."""
        self.cache.clear()
        self.hits = 0
        self.misses = 0
        logger.info("Computation cache cleared")

    def size(self) -> int:
        """Get number of cached entries."""
        return len(self.cache)


computation_cache = ComputationCache()
