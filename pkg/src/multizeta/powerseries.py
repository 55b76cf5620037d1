"""Truncated Laurent series over the rationals, and symbolic kernel expansions.

The central object is `LaurentSeries`: finitely many exact coefficients for
exponents in [lead, trunc), everything above the truncation unknown.  All
arithmetic tracks the truncation honestly, so a product of two series is
never claimed to more terms than the inputs support.

The builders at the bottom produce the four generating kernels used
throughout the package:

    f(t) = 1/(e^t - 1)        b(t) = t*f(t)
    F(t) = 1/(1 - e^(-t))     G(t) = t*F(t)

f and F have a simple pole at 0 (lead exponent -1); b and G are analytic
with constant term 1.  `FTermExpansion` captures the closed form of the
m-th derivatives of F and G as short combinations of powers of F, which
both the series routes and the numeric integrators consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import expm1, factorial

from .exactcore import stirling2

__all__ = [
    "LaurentSeries",
    "FTermExpansion",
    "expand_F_derivative",
    "expand_G_derivative",
    "series_of_f",
    "series_of_b",
    "series_of_F",
    "series_of_G",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients for t^lead .. t^(trunc-1); exact, immutable.

    Invariant: len(coeffs) == trunc - lead, and coeffs[0] != 0 unless the
    series is identically zero up to the truncation (then coeffs == () and
    lead == trunc).
    """

    lead: int
    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        lead = self.lead
        if lead + len(coeffs) != self.trunc:
            raise ValueError("trunc must equal lead + len(coeffs)")
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
            lead += 1
        if not coeffs:
            lead = self.trunc
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, lead: int, coeffs) -> "LaurentSeries":
        coeffs = tuple(Fraction(c) for c in coeffs)
        return cls(lead, coeffs, lead + len(coeffs))

    @classmethod
    def zero(cls, trunc: int) -> "LaurentSeries":
        return cls(trunc, (), trunc)

    @classmethod
    def one(cls, trunc: int) -> "LaurentSeries":
        if trunc <= 0:
            return cls.zero(trunc)
        return cls.from_coeffs(0, (Fraction(1),) + (_ZERO,) * (trunc - 1))

    # -- queries -----------------------------------------------------------

    def coefficient(self, e: int) -> Fraction:
        """Coefficient of t^e.  Raises if e is beyond the truncation."""
        if e >= self.trunc:
            raise ValueError(f"coefficient t^{e} unknown: series truncated at t^{self.trunc}")
        if e < self.lead:
            return _ZERO
        return self.coeffs[e - self.lead]

    def is_zero(self) -> bool:
        return not self.coeffs

    def agrees_with(self, other: "LaurentSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality on the window both series know (below upto)."""
        stop = min(self.trunc, other.trunc)
        if upto is not None:
            stop = min(stop, upto)
        start = min(self.lead, other.lead)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(start, stop))

    def evaluate(self, t):
        """Horner evaluation at a nonzero float/complex t."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + float(c)
        return acc * t ** self.lead

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.lead, tuple(-c for c in self.coeffs), self.trunc)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        trunc = min(self.trunc, other.trunc)
        lead = min(self.lead, other.lead, trunc)
        coeffs = tuple(self.coefficient(e) + other.coefficient(e) for e in range(lead, trunc))
        return LaurentSeries(lead, coeffs, trunc)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        trunc = min(self.lead + other.trunc, other.lead + self.trunc)
        lead = self.lead + other.lead
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(trunc)
        n = trunc - lead
        out = [_ZERO] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                out[i + j] += a * b
        return LaurentSeries(lead, tuple(out), trunc)

    def scale(self, c) -> "LaurentSeries":
        c = Fraction(c)
        if c == 0:
            return LaurentSeries.zero(self.trunc)
        return LaurentSeries(self.lead, tuple(c * a for a in self.coeffs), self.trunc)

    def power(self, n: int) -> "LaurentSeries":
        """Truncated n-th power, n >= 1, by binary exponentiation."""
        if n < 1:
            raise ValueError(f"power wants n >= 1, got {n}")
        acc = None
        sq = self
        while n:
            if n & 1:
                acc = sq if acc is None else acc * sq
            n >>= 1
            if n:
                sq = sq * sq
        return acc

    def reciprocal(self) -> "LaurentSeries":
        """1/self; the series must be nonzero at its truncation."""
        if not self.coeffs:
            raise ZeroDivisionError("cannot invert a series that is zero to its truncation")
        c0 = self.coeffs[0]
        n = len(self.coeffs)
        out = [_ZERO] * n
        out[0] = 1 / c0
        for i in range(1, n):
            s = _ZERO
            for j in range(1, i + 1):
                s += self.coeffs[j] * out[i - j]
            out[i] = -s / c0
        return LaurentSeries.from_coeffs(-self.lead, out)

    def derivative(self) -> "LaurentSeries":
        coeffs = tuple(Fraction(e) * self.coefficient(e) for e in range(self.lead, self.trunc))
        return LaurentSeries(self.lead - 1, coeffs, self.trunc - 1)

    def compose_neg(self) -> "LaurentSeries":
        """Substitute t -> -t."""
        coeffs = tuple(c if (e % 2 == 0) else -c for e, c in zip(range(self.lead, self.trunc), self.coeffs))
        return LaurentSeries(self.lead, coeffs, self.trunc)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries(self.lead + k, self.coeffs, self.trunc + k)

    def truncate(self, new_trunc: int) -> "LaurentSeries":
        if new_trunc >= self.trunc:
            return self
        keep = max(0, new_trunc - self.lead)
        return LaurentSeries(min(self.lead, new_trunc), self.coeffs[:keep], new_trunc)

    def mul_exp(self, c) -> "LaurentSeries":
        """Multiply by exp(c*t), truncated so the product keeps self.trunc."""
        c = Fraction(c)
        n = self.trunc - self.lead
        term = Fraction(1)
        coeffs = []
        for k in range(n):
            coeffs.append(term)
            term = term * c / (k + 1)
        return self * LaurentSeries.from_coeffs(0, coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O(t^{self.trunc})"
        parts = [f"({c})t^{e}" for e, c in zip(range(self.lead, self.trunc), self.coeffs) if c != 0]
        return " + ".join(parts) + f" + O(t^{self.trunc})"


# -- kernel builders -------------------------------------------------------


def _expm1_series(trunc: int) -> LaurentSeries:
    coeffs = [Fraction(1, factorial(n)) for n in range(1, max(trunc, 1))]
    return LaurentSeries(1, tuple(coeffs), trunc)


def series_of_f(trunc: int) -> LaurentSeries:
    """f(t) = 1/(e^t - 1), known for exponents -1 .. trunc-1."""
    return _expm1_series(trunc + 2).reciprocal().truncate(trunc)


def series_of_b(trunc: int) -> LaurentSeries:
    """b(t) = t*f(t) = t/(e^t - 1); its n-th coefficient is B_n/n!."""
    return series_of_f(trunc - 1).shift(1)


def series_of_F(trunc: int) -> LaurentSeries:
    """F(t) = 1/(1 - e^(-t)) = -f(-t)."""
    return -series_of_f(trunc).compose_neg()


def series_of_G(trunc: int) -> LaurentSeries:
    """G(t) = t*F(t) = b(-t)."""
    return series_of_b(trunc).compose_neg()


# -- closed-form derivatives of F and G ------------------------------------


@dataclass(frozen=True)
class FTermExpansion:
    """A finite combination  sum_i  coeff_i * t^(t_pow_i) * F(t)^(f_pow_i).

    t_pow is 0 or 1 in every expansion produced here.  The object knows how
    to render itself as an exact Laurent series and how to evaluate itself
    at a real t away from the origin (where F is cheap and stable).
    """

    terms: tuple[tuple[Fraction, int, int], ...]

    def to_series(self, trunc: int) -> LaurentSeries:
        max_f = max((fp for _, _, fp in self.terms), default=1)
        # F^k has lead -k; build F deep enough that every power keeps trunc.
        base = series_of_F(trunc + max_f - 1)
        powers: dict[int, LaurentSeries] = {}
        acc = LaurentSeries.zero(trunc)
        for coeff, tp, fp in self.terms:
            if fp not in powers:
                powers[fp] = base.power(fp)
            acc = acc + powers[fp].shift(tp).scale(coeff).truncate(trunc)
        return acc

    def evaluate_float(self, t: float) -> float:
        """Direct evaluation via F(t) = 1/(1 - e^(-t)); use for t not near 0."""
        F = 1.0 / (-expm1(-t))
        out = 0.0
        for coeff, tp, fp in self.terms:
            out += float(coeff) * (t ** tp) * (F ** fp)
        return out


def expand_F_derivative(m: int) -> FTermExpansion:
    """m-th derivative of F as a signed Stirling combination of F-powers.

    F^(m)(t) = sum_{k=1}^{m+1} (-1)^(k-1) (k-1)! S(m+1, k) F(t)^k.
    """
    if m < 0:
        raise ValueError(f"derivative order must be >= 0, got {m}")
    terms = []
    for k in range(1, m + 2):
        s = stirling2(m + 1, k)
        if s:
            terms.append((Fraction((-1) ** (k - 1) * factorial(k - 1) * s), 0, k))
    return FTermExpansion(tuple(terms))


def expand_G_derivative(m: int) -> FTermExpansion:
    """m-th derivative of G = t*F via the product rule on the F expansion.

    G^(m)(t) = sum_{j=1}^{m+1} (-1)^(j-1) (j-1)! [S(m+1, j) t + m S(m, j)] F(t)^j.
    """
    if m < 0:
        raise ValueError(f"derivative order must be >= 0, got {m}")
    terms = []
    for j in range(1, m + 2):
        sign_fact = (-1) ** (j - 1) * factorial(j - 1)
        s_t = stirling2(m + 1, j)
        if s_t:
            terms.append((Fraction(sign_fact * s_t), 1, j))
        s_c = m * stirling2(m, j) if m >= 1 else 0
        if s_c:
            terms.append((Fraction(sign_fact * s_c), 0, j))
    return FTermExpansion(tuple(terms))
