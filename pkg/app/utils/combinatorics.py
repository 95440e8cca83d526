"""Exact integer combinatorics used by the dimension formulas."""
import math
from typing import Iterator, Optional

from app.core.config import get_settings
from app.core.errors import DimensionOverflow


def _check_cap(value: int, bit_cap: Optional[int]) -> int:
    cap = get_settings().BINOMIAL_BIT_CAP if bit_cap is None else bit_cap
    if value.bit_length() > cap:
        raise DimensionOverflow(f"integer of {value.bit_length()} bits exceeds the {cap}-bit cap")
    return value


def binomial(m: int, k: int, bit_cap: Optional[int] = None) -> int:
    """C(m, k) with the convention C(m, k) = 0 whenever m < k or k < 0."""
    if k < 0 or m < k:
        return 0
    return _check_cap(math.comb(m, k), bit_cap)


def multinomial(parts: tuple[int, ...]) -> int:
    """(sum parts)! / prod(part!)"""
    result = 1
    running = 0
    for part in parts:
        running += part
        result *= math.comb(running, part)
    return result


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative integers summing to ``total``.

    Yielded in descending lexicographic order: the first entry starts at
    ``total`` and counts down.
    """
    if parts <= 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def capped_compositions(parts: int, total: int, cap: int) -> int:
    """Number of solutions of e_1 + ... + e_parts = total with 0 <= e_i <= cap.

    Inclusion-exclusion over the set of entries forced above the cap.
    """
    if parts <= 0:
        return 1 if total == 0 else 0
    if total < 0 or cap < 0:
        return 0
    count = 0
    for k in range(parts + 1):
        rest = total - k * (cap + 1)
        if rest < 0:
            break
        term = math.comb(parts, k) * math.comb(rest + parts - 1, parts - 1)
        count += -term if k % 2 else term
    return count
