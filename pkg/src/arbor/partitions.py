"""Integer partitions in reverse-lexicographic order.

A partition is a weakly decreasing tuple of positive ints; ``()`` is the
unique partition of 0.
"""

from __future__ import annotations

from typing import Iterator

Partition = tuple[int, ...]


def iter_partitions(n: int, min_part: int = 1, max_part: int | None = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` with parts in ``[min_part, max_part]``.

    Largest first part first, i.e. reverse-lexicographic order.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if min_part < 1:
        raise ValueError("min_part must be >= 1")
    if max_part is None or max_part > n:
        max_part = n
    yield from _rec(n, min_part, max_part)


def _rec(n: int, lo: int, hi: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, hi), lo - 1, -1):
        rest = n - first
        if 0 < rest < lo:
            continue
        for tail in _rec(rest, lo, first):
            yield (first,) + tail


def partitions_all(n: int) -> list[Partition]:
    """All partitions of ``n``; ``len`` equals the partition function p(n)."""
    return list(iter_partitions(n))


def partitions_min2(r: int) -> list[Partition]:
    """Partitions of ``r`` whose parts are all at least 2."""
    return list(iter_partitions(r, min_part=2))


def to_frequency(p: Partition, n: int) -> tuple[int, ...]:
    """Multiplicity vector ``(i_1, ..., i_n)`` where ``i_k`` counts parts equal to k."""
    freq = [0] * n
    for part in p:
        if not 1 <= part <= n:
            raise ValueError(f"part {part} outside 1..{n}")
        freq[part - 1] += 1
    return tuple(freq)
