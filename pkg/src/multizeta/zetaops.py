"""Mellin-integral zeta functions built on derivative kernels of F and G.

The objects here are the integrals

    (1/Gamma(s)) Integral_0^inf t^(s-1) * kernel(t) * e^(-x t) dt

with kernel either the m-th derivative of F(t) = 1/(1 - e^(-t)) (the
"single" family) or a product of derivatives of G(t) = t*F(t) (the
"multi" family, one derivative order per factor).  Every function of the
family is computable by at least two routes:

  reduction   rewrite the kernel as a combination of t^a * F^J, so the
              integral becomes Pochhammer-weighted multiple Hurwitz zeta
              values (exact rational coefficients, floats only at the end);
  quadrature  numerically integrate the defining Mellin integral (real s
              only) - slow, crude, and sharing no code with the reduction,
              which is the point;
  exact       at s = -n the value is rational for rational x; the closed
              form and an independent series-coefficient route both live
              here.

Agreement of the routes is what the verification registry consumes.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, e, exp, expm1, factorial, gamma, log
from typing import Sequence

from scipy.integrate import quad

from .bernoulli import RationalPoly, bernoulli_number, bernoulli_poly
from .errors import DivergenceError, DomainError, PoleError, QuadratureError
from .exactcore import binomial, iter_compositions, multinomial, stirling2
from .hurwitz import (
    EvalParams,
    hurwitz_zeta,
    multi_hurwitz,
    multi_hurwitz_series,
    polynomial_dirichlet_sum,
)
from .powerseries import (
    FTermExpansion,
    expand_F_derivative,
    expand_G_derivative,
    series_of_G,
)

__all__ = [
    "pochhammer",
    "z_single_hurwitz",
    "z_single_multizeta",
    "zhat_sides",
    "ReducedForm",
    "reduce_multi",
    "z_multi",
    "z_multi_series",
    "z_single_quadrature",
    "z_multi_quadrature",
    "z_multi_neg",
    "z_multi_neg_poly",
    "z_multi_neg_series",
]


def pochhammer(s, k: int) -> complex:
    """Rising factorial s(s+1)...(s+k-1); k = 0 gives 1."""
    if k < 0:
        raise ValueError(f"pochhammer wants k >= 0, got {k}")
    acc = complex(1)
    s = complex(s)
    for i in range(k):
        acc *= s + i
    return acc


# -- the single family (kernel F^(m)) --------------------------------------


def z_single_hurwitz(m: int, s, x, params: EvalParams | None = None) -> complex:
    """Leibniz-route value: sum_k (-1)^k C(m,k) x^(m-k) zeta(s-k, x)."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    s = complex(s)
    x = float(x)
    acc = 0j
    for k in range(m + 1):
        acc += (-1) ** k * binomial(m, k) * x ** (m - k) * hurwitz_zeta(s - k, x, params)
    return acc


def z_single_multizeta(
    m: int, s, x, oracle: bool = False, params: EvalParams | None = None
) -> complex:
    """Kernel-expansion route: sum_k (-1)^(k-1) (k-1)! S(m+1,k) zeta_k(s, x).

    With oracle=True the zeta_k factors come from the direct-series oracle
    (needs Re(s) > m + 2), making this side fully independent of
    z_single_hurwitz; otherwise the reduction evaluator is used.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    s = complex(s)
    acc = 0j
    for k in range(1, m + 2):
        st = stirling2(m + 1, k)
        if not st:
            continue
        # The k-sum cancels its own leading terms, so the oracle runs well
        # below the final tolerance to keep the absolute error small.
        zk = (
            multi_hurwitz_series(k, s, x, tol=1e-14)
            if oracle
            else multi_hurwitz(k, s, x, params)
        )
        acc += (-1) ** (k - 1) * factorial(k - 1) * st * zk
    return acc


def zhat_sides(
    m: int,
    s,
    x,
    variant: str = "corrected",
    oracle: bool = False,
    params: EvalParams | None = None,
) -> tuple[complex, complex]:
    """Both sides of the G-kernel identity, as (lhs, rhs).

    corrected   lhs = sum_k (-1)^(k-1) (k-1)! [ s S(m+1,k) zeta_k(s+1,x)
                                                + m S(m,k) zeta_k(s,x) ]
                rhs = sum_k (-1)^k C(m,k) x^(m-k) (s-k) zeta(s-k+1, x)
    as-printed  lhs carries a global (-1)^m and an internal minus instead
                of the alternating sign, and the rhs evaluates the zeta at
                second argument m rather than x (so m = 0 is a domain
                error).  Kept verbatim so the verifier can show it fails.
    """
    if variant not in ("corrected", "as-printed"):
        raise ValueError(f"unknown variant {variant!r}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    s = complex(s)
    x = float(x)

    def zk(k: int, arg: complex) -> complex:
        if oracle:
            return multi_hurwitz_series(k, arg, x, tol=1e-14)
        return multi_hurwitz(k, arg, x, params)

    lhs = 0j
    for k in range(1, m + 2):
        st1 = stirling2(m + 1, k)
        st0 = stirling2(m, k) if m >= 1 else 0
        term = 0j
        if st1:
            term += s * st1 * zk(k, s + 1)
        if st0:
            inner = m * st0 * zk(k, s)
            term += inner if variant == "corrected" else -inner
        if term:
            sign = (-1) ** (k - 1) if variant == "corrected" else (-1) ** m
            lhs += sign * factorial(k - 1) * term

    second = x if variant == "corrected" else float(m)
    rhs = 0j
    for k in range(m + 1):
        rhs += (
            (-1) ** k
            * binomial(m, k)
            * x ** (m - k)
            * (s - k)
            * hurwitz_zeta(s - k + 1, second, params)
        )
    return lhs, rhs


# -- reduction of G-derivative products ------------------------------------


@dataclass(frozen=True)
class ReducedForm:
    """Product of G-derivatives as sum coeff * t^a * F^J.

    Under the Mellin integral each term contributes
    coeff * (s)_a * zeta_J(s + a, x), which is how z_multi evaluates it.
    """

    terms: tuple[tuple[Fraction, int, int], ...]  # (coeff, a, J)

    def to_expansion_series(self, trunc: int):
        """Render as a Laurent series (for oracle comparisons in tests)."""
        acc = None
        from .powerseries import series_of_F

        max_j = max(j for _, _, j in self.terms)
        base = series_of_F(trunc + max_j - 1)
        for coeff, a, j in self.terms:
            piece = base.power(j).shift(a).scale(coeff).truncate(trunc)
            acc = piece if acc is None else acc + piece
        return acc


_reduce_cache: dict[tuple[int, ...], ReducedForm] = {}
_reduce_lock = threading.Lock()


def reduce_multi(ms: Sequence[int]) -> ReducedForm:
    """Expand prod_i G^(m_i) into t^a F^J terms; a <= d, d <= J <= sum(ms)+d."""
    key = tuple(int(m) for m in ms)
    if not key:
        raise ValueError("need at least one derivative order")
    if any(m < 0 for m in key):
        raise ValueError(f"orders must be >= 0, got {key}")
    form = _reduce_cache.get(key)
    if form is not None:
        return form
    acc: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for m in key:
        nxt: dict[tuple[int, int], Fraction] = {}
        for coeff, tp, fp in expand_G_derivative(m).terms:
            for (a, j), c in acc.items():
                k2 = (a + tp, j + fp)
                nxt[k2] = nxt.get(k2, Fraction(0)) + c * coeff
        acc = nxt
    terms = tuple(
        (c, a, j) for (a, j), c in sorted(acc.items()) if c != 0
    )
    form = ReducedForm(terms)
    with _reduce_lock:
        _reduce_cache.setdefault(key, form)
    return form


def z_multi(ms: Sequence[int], s, x, params: EvalParams | None = None) -> complex:
    """Reduction-route value of the d-factor Mellin zeta at complex s.

    The Pochhammer-weighted terms alternate and can dwarf the result when
    both sum(ms) and Re(s) are large, so the relative accuracy degrades
    with that cancellation; z_multi_series is the stable route there.
    """
    form = reduce_multi(ms)
    s = complex(s)
    acc = 0j
    for coeff, a, j in form.terms:
        acc += complex(coeff) * pochhammer(s, a) * multi_hurwitz(j, s + a, x, params)
    return acc


def _power_sum_poly(p: int) -> RationalPoly:
    """Faulhaber polynomial: sum_{w=0}^{U} w^p as a polynomial in U."""
    if p == 0:
        return RationalPoly((Fraction(1), Fraction(1)))
    b = bernoulli_poly(p + 1)
    return (b.translate(1) - RationalPoly((b.coefficient(0),))).scale(
        Fraction(1, p + 1)
    )


_count_cache: dict[tuple[int, ...], RationalPoly] = {}
_count_lock = threading.Lock()


def _count_poly(ms: tuple[int, ...]) -> RationalPoly:
    """P(U) = sum over u_1+...+u_d = U of u_1^{m_1} ... u_d^{m_d}, exactly.

    Built by convolving one factor at a time: folding u^m against a
    polynomial in (U - u) expands binomially into Faulhaber sums.  Degree
    is sum(ms) + d - 1; values at integers are nonnegative integers.
    """
    key = tuple(sorted(ms))
    cached = _count_cache.get(key)
    if cached is not None:
        return cached
    poly = RationalPoly.monomial(key[0])
    for m in key[1:]:
        acc = RationalPoly(())
        for j, c in enumerate(poly.coeffs):
            if not c:
                continue
            for r in range(j + 1):
                acc = acc + (
                    _power_sum_poly(m + r) * RationalPoly.monomial(j - r)
                ).scale(c * binomial(j, r) * (-1) ** r)
        poly = acc
    with _count_lock:
        _count_cache.setdefault(key, poly)
    return poly


def z_multi_series(ms: Sequence[int], s, x, tol: float = 1e-13) -> complex:
    """Direct-series route for the d-factor Mellin zeta.

    Each kernel factor is a lattice sum whose m-th derivative contributes
    (-1)^m (t u^m - m u^(m-1)) per lattice site u, so the product expands
    over subsets T of the factors into 2^d Dirichlet sums

        (s)_|T| * sum_U Q_T(U) (x+U)^(-s-|T|)

    with exact nonnegative count polynomials Q_T.  Every head term of
    every inner sum keeps one sign for real s, so the only cancellation
    left is across the 2^d outer terms; that stays mild where the
    reduction route loses many digits.  Needs Re(s) > sum(ms)."""
    key = tuple(int(m) for m in ms)
    if not key or any(m < 0 for m in key):
        raise ValueError(f"orders must be a nonempty tuple of ints >= 0, got {ms}")
    s = complex(s)
    if s.real <= sum(key):
        raise DivergenceError(
            f"series route for orders {key} needs Re(s) > {sum(key)}, "
            f"got Re(s) = {s.real}"
        )
    x = float(x)
    if x <= 0:
        raise DomainError(f"z_multi_series needs x > 0, got x={x}")
    d = len(key)
    total = 0j
    for mask in range(1 << d):
        exps = []
        scale = 1
        t_power = 0
        for i, m in enumerate(key):
            if mask >> i & 1:
                exps.append(m)
                t_power += 1
            else:
                # the derivative knocked this factor's t down: weight m u^(m-1)
                scale *= m
                if scale == 0:
                    break
                exps.append(m - 1)
        if scale == 0:
            continue
        poly = _count_poly(tuple(exps))
        in_v = poly.translate(-Fraction(x))
        part = polynomial_dirichlet_sum(
            [complex(c) for c in in_v.coeffs],
            lambda u, _p=poly: int(_p(u)),
            s + t_power,
            x,
            tol,
            f"product-kernel series {key}",
        )
        total += (-1) ** (d - t_power) * scale * pochhammer(s, t_power) * part
    return (-1) ** sum(key) * total


# -- quadrature oracle -----------------------------------------------------


class _KernelNumeric:
    """Float evaluator of one F-term expansion, stable across (0, inf).

    Below the switch point the truncated Taylor/Laurent expansion is used
    (radius of convergence 2*pi, so depth 48 is far more than needed).
    Above it, powers of F are re-expanded around F = 1 in the decaying
    variable eps = 1/(e^t - 1), which avoids the cancellation that makes
    the naive F-power sum useless for large t.
    """

    SWITCH = 1.0

    def __init__(self, expansion: FTermExpansion, depth: int = 48):
        series = expansion.to_series(depth)
        self._lead = series.lead
        self._taylor = [float(c) for c in series.coeffs]
        shifted: dict[int, dict[int, Fraction]] = {0: {}, 1: {}}
        for coeff, tp, fp in expansion.terms:
            tbl = shifted[tp]
            for j in range(fp + 1):
                tbl[j] = tbl.get(j, Fraction(0)) + coeff * comb(fp, j)

        def dense(tbl: dict[int, Fraction]) -> list[float]:
            top = max(tbl, default=0)
            return [float(tbl.get(j, 0)) for j in range(top + 1)]

        self._const = dense(shifted[0])
        self._linear = dense(shifted[1])

    def __call__(self, t: float) -> float:
        if t < self.SWITCH:
            acc = 0.0
            for c in reversed(self._taylor):
                acc = acc * t + c
            return acc * t ** self._lead
        eps = 1.0 / expm1(t)
        lin = 0.0
        for c in reversed(self._linear):
            lin = lin * eps + c
        con = 0.0
        for c in reversed(self._const):
            con = con * eps + c
        return t * lin + con

    def slope_bound(self) -> float:
        """M with |value(t)| <= M * t for every t >= 1."""
        eps1 = 1.0 / (e - 1.0)
        lin = sum(abs(c) * eps1 ** j for j, c in enumerate(self._linear))
        con = sum(abs(c) * eps1 ** j for j, c in enumerate(self._const))
        return lin + con


def _require_real_clear(s, pole_top: int) -> float:
    s = complex(s)
    if s.imag != 0:
        raise DomainError("quadrature oracle takes real s only")
    sr = s.real
    if sr <= 0:
        raise DomainError(f"quadrature oracle needs s > 0, got {sr}")
    nearest = min(abs(sr - p) for p in range(1, pole_top + 1)) if pole_top else 1.0
    if nearest < 0.5 - 1e-12:
        raise DomainError(
            f"s = {sr} is within 0.5 of a pole (poles 1..{pole_top})"
        )
    return sr


def _tail_cut(decay_x: float, power: float, log_const: float) -> float:
    t_cut = max(3.0, 80.0 / decay_x)
    for _ in range(40):
        t_cut = (80.0 + log_const + max(0.0, power) * log(max(t_cut, 3.0))) / decay_x
    return max(t_cut, 2.0 * (power + 2.0) / decay_x + 1.0, 3.0)


def _quad_piece(fn, a: float, b: float) -> tuple[float, float]:
    val, err, *_ = quad(fn, a, b, epsabs=1e-14, epsrel=1e-11, limit=200, full_output=1)
    return val, err


def z_multi_quadrature(ms: Sequence[int], s, x, tol: float = 1e-7) -> float:
    """Direct numeric Mellin integral over the G-derivative product kernel.

    Real s > 0 only, at least 0.5 away from the integer pole range; the
    [0,1] piece is softened by the substitution t = u^(1/s) so the t^(s-1)
    factor disappears, and the tail beyond the cutoff is bounded, not
    integrated.
    """
    key = tuple(int(m) for m in ms)
    d = len(key)
    sr = _require_real_clear(s, sum(key) + d)
    x = float(x)
    if x <= 0:
        raise DomainError(f"need x > 0, got x={x}")
    kernels = [_KernelNumeric(expand_G_derivative(m)) for m in key]

    def product(t: float) -> float:
        acc = 1.0
        for kn in kernels:
            acc *= kn(t)
        return acc

    def smooth(u: float) -> float:
        t = u ** (1.0 / sr)
        return product(t) * exp(-x * t)

    def plain(t: float) -> float:
        return t ** (sr - 1.0) * product(t) * exp(-x * t)

    bound = 1.0
    for kn in kernels:
        bound *= kn.slope_bound()
    t_cut = _tail_cut(x, sr - 1.0 + d, log(bound + 1.0))
    v1, e1 = _quad_piece(smooth, 0.0, 1.0)
    v2, e2 = _quad_piece(plain, 1.0, min(t_cut, 12.0))
    v3, e3 = (0.0, 0.0)
    if t_cut > 12.0:
        v3, e3 = _quad_piece(plain, 12.0, t_cut)
    tail = 2.0 * bound * t_cut ** (sr - 1.0 + d) * exp(-x * t_cut) / x
    g = gamma(sr)
    value = (v1 / sr + v2 + v3) / g
    err = (e1 / sr + e2 + e3 + tail) / g
    if err > tol * max(abs(value), 1e-300):
        raise QuadratureError(
            f"estimated error {err:.3g} above tolerance for ms={key}, s={sr}, x={x}"
        )
    return value


def z_single_quadrature(m: int, s, x, tol: float = 1e-7) -> float:
    """Numeric Mellin integral with the F^(m) kernel (real s > m + 1.5).

    Near zero the kernel diverges like t^(-m-1), so the analytic part
    t^(m+1) F^(m)(t) e^(-xt) is integrated against t^(s-m-2) instead, with
    the same power-absorbing substitution as the multi version.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    sr = _require_real_clear(s, m + 1)
    if sr < m + 1.5:
        raise DomainError(f"kernel F^({m}) needs s >= {m + 1.5}, got {sr}")
    x = float(x)
    if x <= 0:
        raise DomainError(f"need x > 0, got x={x}")
    kernel = _KernelNumeric(expand_F_derivative(m))
    sp = sr - m - 1.0
    limit0 = float((-1) ** m * factorial(m))

    def analytic(t: float) -> float:
        if t <= 0.0:
            return limit0
        return t ** (m + 1) * kernel(t) * exp(-x * t)

    def smooth(u: float) -> float:
        return analytic(u ** (1.0 / sp))

    def plain(t: float) -> float:
        return t ** (sr - 1.0) * kernel(t) * exp(-x * t)

    bound = kernel.slope_bound()
    t_cut = _tail_cut(x, sr, log(bound + 1.0))
    v1, e1 = _quad_piece(smooth, 0.0, 1.0)
    v2, e2 = _quad_piece(plain, 1.0, min(t_cut, 12.0))
    v3, e3 = (0.0, 0.0)
    if t_cut > 12.0:
        v3, e3 = _quad_piece(plain, 12.0, t_cut)
    tail = 2.0 * bound * t_cut ** sr * exp(-x * t_cut) / x
    g = gamma(sr)
    value = (v1 / sp + v2 + v3) / g
    err = (e1 / sp + e2 + e3 + tail) / g
    if err > tol * max(abs(value), 1e-300):
        raise QuadratureError(
            f"estimated error {err:.3g} above tolerance for m={m}, s={sr}, x={x}"
        )
    return value


# -- exact values at non-positive integers ---------------------------------


def z_multi_neg(ms: Sequence[int], n: int, x) -> Fraction:
    """Exact value at s = -n: the closed multinomial form.

    (-1)^(m_1+...+m_d) * sum over k_0+k_1+...+k_d = n of
    n!/(k_0!...k_d!) * x^k_0 * B_{m_1+k_1} ... B_{m_d+k_d},
    with Bernoulli numbers in the product and x carrying its own slot.
    """
    return z_multi_neg_poly(ms, n)(Fraction(x))


def z_multi_neg_poly(ms: Sequence[int], n: int) -> RationalPoly:
    """The s = -n value as an exact polynomial in x."""
    key = tuple(int(m) for m in ms)
    if not key:
        raise ValueError("need at least one derivative order")
    if any(m < 0 for m in key) or n < 0:
        raise ValueError(f"orders and n must be >= 0, got ms={key}, n={n}")
    sign = (-1) ** sum(key)
    coeffs = [Fraction(0)] * (n + 1)
    for parts in iter_compositions(n, len(key) + 1):
        prod = Fraction(multinomial(n, parts))
        for m_i, k_i in zip(key, parts[1:]):
            prod *= bernoulli_number(m_i + k_i)
            if not prod:
                break
        coeffs[parts[0]] += sign * prod
    return RationalPoly(tuple(coeffs))


def z_multi_neg_series(ms: Sequence[int], n: int, x) -> Fraction:
    """Independent route to the s = -n value: (-1)^n n! times the t^n
    coefficient of prod_i G^(m_i)(t) * e^(-xt), all by series arithmetic
    (formal derivatives of the G series, no Stirling expansions)."""
    key = tuple(int(m) for m in ms)
    if not key:
        raise ValueError("need at least one derivative order")
    if any(m < 0 for m in key) or n < 0:
        raise ValueError(f"orders and n must be >= 0, got ms={key}, n={n}")
    prod = None
    for m in key:
        g = series_of_G(n + 1 + m)
        for _ in range(m):
            g = g.derivative()
        prod = g if prod is None else prod * g
    prod = prod.mul_exp(-Fraction(x))
    return (-1) ** n * factorial(n) * prod.coefficient(n)
