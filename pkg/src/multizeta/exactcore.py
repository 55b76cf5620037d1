"""Exact integer and rational kernels: binomials, multinomials, Stirling triangles.

Everything in this module is exact.  Integers are Python's unbounded ints,
rationals are `fractions.Fraction` (always stored normalised).  The two
Stirling triangles grow lazily, live for the process lifetime and may be read
concurrently; extension is serialised by a per-table lock.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "binomial",
    "multinomial",
    "iter_compositions",
    "StirlingTable",
    "stirling2",
    "stirling1_unsigned",
    "kronecker_orthogonality",
    "format_rational",
    "parse_rational",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.  Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * ... * parts[-1]!).  The parts must be >= 0 and sum to n."""
    if n < 0:
        raise ValueError(f"multinomial needs n >= 0, got n={n}")
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be >= 0, got {parts!r}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts must sum to n={n}, got {parts!r}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def iter_compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of `slots` nonnegative ints summing to `total`."""
    if slots < 1:
        raise ValueError(f"need at least one slot, got {slots}")
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in iter_compositions(total - head, slots - 1):
            yield (head,) + rest


class StirlingTable:
    """Lazily grown triangle of Stirling numbers.

    kind "second":         S(n, m), partitions of an n-set into m blocks,
                           S(n, m) = m*S(n-1, m) + S(n-1, m-1).
    kind "first-unsigned": c(n, k), permutations of n letters with k cycles,
                           c(n, k) = (n-1)*c(n-1, k) + c(n-1, k-1).

    Rows, once computed, are never mutated, so concurrent reads are safe;
    growing the triangle takes the lock.
    """

    KINDS = ("second", "first-unsigned")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        """Row n as a tuple indexed by k = 0..n."""
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        if n > self.max_n:
            with self._lock:
                self._extend_locked(n)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"Stirling index n must be >= 0, got {n}")
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]

    def _extend_locked(self, n: int) -> None:
        while len(self._rows) <= n:
            prev = self._rows[-1]
            m = len(self._rows)  # the row being built
            second = self.kind == "second"
            row = [0] * (m + 1)
            for k in range(m + 1):
                carry = prev[k - 1] if k >= 1 else 0
                keep = prev[k] if k <= m - 1 else 0
                row[k] = carry + (k * keep if second else (m - 1) * keep)
            self._rows.append(tuple(row))


_SECOND = StirlingTable("second")
_FIRST = StirlingTable("first-unsigned")


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m)."""
    return _SECOND.value(n, m)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k)."""
    return _FIRST.value(n, k)


def kronecker_orthogonality(n: int, m: int) -> int:
    """sum_k (-1)^k c(n, k) S(k, m); equals (-1)^n when n == m, else 0."""
    top = max(n, m)
    return sum((-1) ** k * stirling1_unsigned(n, k) * stirling2(k, m) for k in range(top + 1))


def format_rational(q: Fraction | int) -> str:
    """Encode a rational as "num/den", omitting "/den" when the value is integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational; also accepts plain decimal strings exactly."""
    return Fraction(text.strip())
