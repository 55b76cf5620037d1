"""Bernoulli numbers, Bernoulli polynomials and their higher-order relatives.

Conventions: B_1 = -1/2 (the generating function t/(e^t - 1)); the order-n
polynomials come from the n-th power of that kernel,

    (t/(e^t - 1))^n * e^(x*t) = sum_m  poly(m, n)(x) * t^m / m!,

so order 1 recovers the classical Bernoulli polynomials and order 0 gives
plain powers of x.  Values are exact Fractions throughout.

The number cache uses its own recurrence rather than the series builders in
`powerseries`, so the two routes stay independent and can be played against
each other in tests.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exactcore import iter_compositions, multinomial
from .powerseries import LaurentSeries, series_of_b

__all__ = [
    "bernoulli_number",
    "RationalPoly",
    "bernoulli_poly",
    "norlund_poly",
    "norlund_number",
    "umbral_power",
]

_ZERO = Fraction(0)

_numbers: list[Fraction] = [Fraction(1)]
_numbers_lock = threading.Lock()


def bernoulli_number(m: int) -> Fraction:
    """B_m, by the defining recurrence  sum_{k<=m} C(m+1, k) B_k = 0 for m >= 1."""
    if m < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {m}")
    if m >= len(_numbers):
        with _numbers_lock:
            while len(_numbers) <= m:
                j = len(_numbers)
                acc = sum((comb(j + 1, k) * _numbers[k] for k in range(j)), _ZERO)
                _numbers.append(-acc / (j + 1))
    return _numbers[m]


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with Fraction coefficients, stored ascending by degree.

    Trailing zeros are stripped on construction; the zero polynomial has an
    empty coefficient tuple.  Calling the polynomial is exact for int and
    Fraction arguments and falls back to float Horner for float/complex.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            acc = _ZERO
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if not self.coeffs or not other.coeffs:
            return RationalPoly(())
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(tuple(out))

    def scale(self, c) -> "RationalPoly":
        c = Fraction(c)
        return RationalPoly(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(Fraction(k) * self.coeffs[k] for k in range(1, len(self.coeffs))))

    def translate(self, c) -> "RationalPoly":
        """p(x + c), expanded exactly."""
        from .exactcore import binomial

        c = Fraction(c)
        n = len(self.coeffs)
        out = [_ZERO] * n
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            power = Fraction(1)
            for r in range(j, -1, -1):
                out[r] += a * binomial(j, r) * power
                power *= c
        return RationalPoly(tuple(out))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> list[str]:
        """Ascending coefficient strings, "num/den"; the zero polynomial is ["0"]."""
        from .exactcore import format_rational

        if not self.coeffs:
            return ["0"]
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RationalPoly":
        return cls(tuple(Fraction(s) for s in data))

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPoly":
        return cls((_ZERO,) * k + (Fraction(c),))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            term = "" if (k > 0 and abs(c) == 1) else str(abs(c))
            if k == 1:
                term += "x" if not term else "*x"
            elif k > 1:
                term += f"x^{k}" if not term else f"*x^{k}"
            parts.append(("-" if c < 0 else "+", term or "1"))
        sign0, first = parts[0]
        text = ("-" if sign0 == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


_poly_cache: dict[int, RationalPoly] = {}
_poly_lock = threading.Lock()


def bernoulli_poly(m: int) -> RationalPoly:
    """B_m(x) = sum_k C(m, k) B_k x^(m-k)."""
    if m < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {m}")
    poly = _poly_cache.get(m)
    if poly is None:
        coeffs = [comb(m, k) * bernoulli_number(k) for k in range(m, -1, -1)]
        poly = RationalPoly(tuple(coeffs))
        with _poly_lock:
            _poly_cache.setdefault(m, poly)
    return poly


_bpow_cache: dict[int, LaurentSeries] = {}
_bpow_lock = threading.Lock()


def _b_power(n: int, trunc: int) -> LaurentSeries:
    """(t/(e^t-1))^n with coefficients known below t^trunc; cached, regrown on demand."""
    with _bpow_lock:
        cur = _bpow_cache.get(n)
        if cur is None or cur.trunc < trunc:
            depth = max(trunc, 2 * (cur.trunc if cur else 0), 16)
            cur = series_of_b(depth).power(n)
            _bpow_cache[n] = cur
    return cur


def norlund_poly(m: int, n: int) -> RationalPoly:
    """Order-n Bernoulli polynomial of degree m (exact)."""
    if m < 0 or n < 0:
        raise ValueError(f"need m >= 0 and n >= 0, got m={m}, n={n}")
    if n == 0:
        return RationalPoly.monomial(m)
    series = _b_power(n, m + 1)
    fact_m = factorial(m)
    coeffs = [_ZERO] * (m + 1)
    for i in range(m + 1):
        c = series.coefficient(i)
        if c:
            coeffs[m - i] = c * Fraction(fact_m, factorial(m - i))
    return RationalPoly(tuple(coeffs))


def norlund_number(m: int, n: int) -> Fraction:
    """Constant term of the order-n polynomial: the order-n Bernoulli number."""
    return norlund_poly(m, n).coefficient(0)


def umbral_power(ms: Sequence[int], n: int) -> RationalPoly:
    """(B_{m_1}(x) + ... + B_{m_d}(x))^n expanded umbrally.

    Each cross term B_{m_1}^{k_1} ... B_{m_d}^{k_d} is replaced by the product
    of the Bernoulli polynomials B_{m_i + k_i}(x); the result is a polynomial.
    """
    if n < 0:
        raise ValueError(f"umbral exponent must be >= 0, got {n}")
    if not ms:
        raise ValueError("need at least one index")
    acc = RationalPoly(())
    for ks in iter_compositions(n, len(ms)):
        term = RationalPoly((Fraction(multinomial(n, ks)),))
        for m_i, k_i in zip(ms, ks):
            term = term * bernoulli_poly(m_i + k_i)
        acc = acc + term
    return acc
