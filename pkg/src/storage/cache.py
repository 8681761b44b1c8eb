"""In-memory memo for computed invariants shared by the verification threads."""
import threading
from typing import Callable, Hashable, Optional, TypeVar

from loguru import logger

V = TypeVar("V")


class ResultCache:
    """Thread-safe memo keyed by hashable tuples such as ("ip", "sl2", 4)."""

    def __init__(self) -> None:
        self._cache: dict[Hashable, object] = {}
        self._lock = threading.Lock()
        self.hits = 0

    def get(self, key: Hashable) -> Optional[object]:
        with self._lock:
            value = self._cache.get(key)
            if value is not None:
                self.hits += 1
            return value

    def set(self, key: Hashable, value: object) -> None:
        with self._lock:
            self._cache[key] = value

    def get_or_compute(self, key: Hashable, compute: Callable[[], V]) -> V:
        cached = self.get(key)
        if cached is not None:
            return cached  # type: ignore[return-value]
        value = compute()
        self.set(key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self.hits = 0
        logger.debug("Result cache cleared")

    def __len__(self) -> int:
        return len(self._cache)
