"""Utility decorators."""
import time
from functools import wraps
from typing import Any, Callable, TypeVar, cast

from loguru import logger

F = TypeVar("F", bound=Callable[..., Any])


def measure_time(func: F) -> F:
    """Measure function execution time."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        start = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            elapsed = time.perf_counter() - start
            logger.debug(f"{func.__name__}{_describe(args)} took {elapsed:.3f}s")

    return cast(F, wrapper)


def _describe(args: tuple[Any, ...]) -> str:
    shown = [repr(a) for a in args if isinstance(a, (int, str))]
    return f"({', '.join(shown)})" if shown else ""
