"""Three ways to compute a(n) for A345973.

``eq1``
    1 + sum over k = 2..n-2 and partitions (n_1..n_j) of n-k with all parts
    >= 2 of a(n_1)...a(n_j).  Never reads a(1).
``eq3``
    a(m+2) = sum over all partitions of m of the product of a(part),
    which needs the convention a(1) = 1.
``gf``
    coefficients of x + x^2 / prod_{k>=1} (1 - a(k) x^k), with the factors
    folded into a truncated reciprocal series one at a time.

Everything is exact Python ``int``; no floats are involved anywhere.

The recurrences enumerate partitions, so ``eq1``/``eq3`` are meant for
n <= 60 (p(58) is already ~7e5).  ``gf`` is O(upto^2) and is the method to
use for anything larger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Mapping

from .partitions import iter_partitions

# The tree family has no element of size 1, but the generating function
# forces a(1) = 1 and the partition-sum recurrence only closes with it.
A1 = 1

METHODS = ("eq1", "eq3", "gf")
RECURRENCE_LIMIT = 60


class SequenceTable:
    """Write-once memo of a(n), n >= 1.  Seeded with a(1) = 1.

    Storing a value under an index that already holds a different value
    raises; re-storing the same value is a no-op.
    """

    def __init__(self, values: Mapping[int, int] | None = None):
        self._values: dict[int, int] = {1: A1}
        if values:
            # Bypasses the consistency check on purpose so tests can build
            # corrupted tables.
            self._values.update(values)

    def __contains__(self, n: int) -> bool:
        return n in self._values

    def __getitem__(self, n: int) -> int:
        return self._values[n]

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int, default: int | None = None) -> int | None:
        return self._values.get(n, default)

    def store(self, n: int, value: int) -> int:
        old = self._values.get(n)
        if old is not None and old != value:
            raise ValueError(f"a({n}) already stored as {old}, refusing {value}")
        self._values[n] = value
        return value

    def indices(self) -> list[int]:
        return sorted(self._values)

    def prefix(self, upto: int) -> list[int]:
        """``[a(1), ..., a(upto)]``; every index must already be present."""
        return [self._values[n] for n in range(1, upto + 1)]

    def items(self) -> Iterable[tuple[int, int]]:
        return sorted(self._values.items())

    def __repr__(self) -> str:
        return f"SequenceTable({dict(self.items())!r})"


@dataclass
class SeriesCoeffs:
    """Truncated reciprocal product ``1 / prod (1 - a_k x^k)``.

    ``coeffs[i]`` is the coefficient of ``x**i``.  After the factors for
    k = 1..m have been folded in, ``coeffs[i]`` is final for every i <= m,
    since a factor with k > i cannot touch degree i.
    """

    order: int
    coeffs: list[int] = field(init=False)
    factors: list[tuple[int, int]] = field(default_factory=list, init=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        self.coeffs = [1] + [0] * self.order

    def include_factor(self, k: int, a_k: int) -> None:
        """Multiply by ``1 / (1 - a_k x^k)``, i.e. c[i] += a_k * c[i-k] ascending."""
        if k < 1:
            raise ValueError("factor degree must be >= 1")
        c = self.coeffs
        for i in range(k, self.order + 1):
            c[i] += a_k * c[i - k]
        self.factors.append((k, a_k))

    def grow(self, order: int) -> None:
        """Raise the truncation order, replaying every factor seen so far."""
        if order < self.order:
            raise ValueError(f"cannot shrink truncation order {self.order} -> {order}")
        if order == self.order:
            return
        factors = self.factors
        self.order = order
        self.coeffs = [1] + [0] * order
        self.factors = []
        for k, a_k in factors:
            self.include_factor(k, a_k)


def _check_table(table: SequenceTable | None) -> SequenceTable:
    return SequenceTable() if table is None else table


def _eq1(n: int, table: SequenceTable) -> int:
    hit = table.get(n)
    if hit is not None:
        return hit
    total = 1
    for k in range(2, n - 1):
        for parts in iter_partitions(n - k, min_part=2):
            total += prod(_eq1(p, table) for p in parts)
    return table.store(n, total)


def a_eq1(n: int, table: SequenceTable | None = None) -> int:
    """a(n) for n >= 2 from the partition-into-parts->=2 recurrence."""
    if n < 2:
        raise ValueError(f"eq1 is defined for n >= 2, got {n}")
    return _eq1(n, _check_table(table))


def _eq3(n: int, table: SequenceTable) -> int:
    hit = table.get(n)
    if hit is not None:
        return hit
    # n == 2 is the empty partition of 0, whose product is 1.
    total = 0
    for parts in iter_partitions(n - 2):
        total += prod(_eq3(p, table) for p in parts)
    return table.store(n, total)


def a_eq3(n: int, table: SequenceTable | None = None) -> int:
    """a(n) for n >= 3 as the sum over all partitions of n-2."""
    if n < 3:
        raise ValueError(f"eq3 is defined for n >= 3, got {n}")
    return _eq3(n, _check_table(table))


def gf_series(upto: int) -> tuple[list[int], SeriesCoeffs]:
    """Run the generating-function iteration; return ``[a(1)..a(upto)]`` and the series.

    The series is truncated at order ``upto - 2`` which is exactly what the
    last term needs.
    """
    if upto < 1:
        raise ValueError(f"upto must be >= 1, got {upto}")
    values = [0, A1]  # 1-based; the x term gives a(1) directly
    series = SeriesCoeffs(max(upto - 2, 0))
    for n in range(0, upto - 1):
        # coeffs[n] needs factors 1..n, and a(n) is already known.
        if n >= 1:
            series.include_factor(n, values[n])
        values.append(series.coeffs[n])
    return values[1:upto + 1], series


def a_gf(upto: int, table: SequenceTable | None = None) -> SequenceTable:
    """Populate ``table`` (fresh if omitted) with a(1..upto) from the generating function."""
    table = _check_table(table)
    values, _ = gf_series(upto)
    for n, v in enumerate(values, start=1):
        table.store(n, v)
    return table


def rhs_coeffs(values: list[int], order: int) -> list[int]:
    """Coefficients 0..order of ``x + x^2 / prod (1 - a_k x^k)`` for given a(1), a(2), ...

    Uses only the supplied values, so it can check a table against the
    identity instead of producing it.
    """
    series = SeriesCoeffs(max(order - 2, 0))
    for k, a_k in enumerate(values[: max(order - 2, 0)], start=1):
        series.include_factor(k, a_k)
    out = [0] * (order + 1)
    if order >= 1:
        out[1] += 1
    for i in range(2, order + 1):
        out[i] += series.coeffs[i - 2]
    return out


def a(n: int, method: str = "gf", table: SequenceTable | None = None) -> int:
    """a(n) by the named method (``eq1``, ``eq3`` or ``gf``)."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if n <= 0:
        raise ValueError(f"a(n) is defined for n >= 1, got {n}")
    table = _check_table(table)
    if n == 1:
        return table[1]
    if method == "eq1":
        return _eq1(n, table)
    if method == "eq3":
        return _eq3(n, table)
    hit = table.get(n)
    if hit is not None:
        return hit
    return a_gf(n, table)[n]


def terms(upto: int, method: str = "gf", table: SequenceTable | None = None) -> list[int]:
    """``[a(1), ..., a(upto)]``."""
    if upto < 1:
        raise ValueError(f"upto must be >= 1, got {upto}")
    table = _check_table(table)
    if method == "gf":
        return a_gf(upto, table).prefix(upto)
    return [a(n, method, table) for n in range(1, upto + 1)]
