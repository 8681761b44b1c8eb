"""Helper utilities."""
from typing import Callable, TypeVar

T = TypeVar("T")


def parse_genus_range(text: str) -> tuple[int, int]:
    """Parse ``"2..5"`` (or a single ``"4"``) into an inclusive pair."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            low = high = int(parts[0])
        elif len(parts) == 2:
            low, high = int(parts[0]), int(parts[1])
        else:
            raise ValueError(text)
    except ValueError:
        raise ValueError(f"Invalid genus range {text!r}, expected A..B") from None
    if low > high:
        raise ValueError(f"Empty genus range {text!r}")
    return low, high


def signed_range_sum(lo: int, hi: int, term: Callable[[int], T], zero: T) -> T:
    """Sum ``term(i)`` for i from lo to hi inclusive.

    Reversed ranges follow the signed convention
    sum_{lo}^{hi} = -sum_{hi+1}^{lo-1}, so that sum_{0}^{-2} f(i) = -f(-1).
    """
    total = zero
    if hi >= lo:
        for i in range(lo, hi + 1):
            total = total + term(i)  # type: ignore[operator]
        return total
    for i in range(hi + 1, lo):
        total = total - term(i)  # type: ignore[operator]
    return total


def ceil_half(n: int) -> int:
    """Ceiling of n/2 for an integer n."""
    return -((-n) // 2)

