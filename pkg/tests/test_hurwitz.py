"""Hurwitz zeta continuation and the order-n generalisation.

Every pinned constant below was frozen from a 50-digit mpmath run
(mp.zeta, or mp.nsum with Euler-Maclaurin acceleration for the
binomial-weighted sums) or from an exact sympy series expansion.
"""

from fractions import Fraction as Fr

import pytest

from multizeta.bernoulli import bernoulli_poly
from multizeta.errors import DivergenceError, DomainError, PoleError
from multizeta.hurwitz import (
    EvalParams,
    default_shift_count,
    hurwitz_zeta,
    hurwitz_zeta_neg,
    multi_hurwitz,
    multi_hurwitz_neg,
    multi_hurwitz_neg_reduction,
    multi_hurwitz_series,
    polynomial_dirichlet_sum,
    second_corollary1_form,
)

ZETA_FROZEN = [
    # (s, x, value, rel tol); the s = -3.5 row carries the conditioning
    # floor of the continuation formula, hence the looser bound.
    (3.0, 1.0, 1.2020569031595942854, 5e-14),
    (5.0, 1.0, 1.0369277551433699263, 5e-14),
    (4.5, 2.3, 0.030762086170147935971, 5e-14),
    (2.5, 0.25, 32.847451954697685863, 5e-14),
    (-3.5, 1.25, -0.0038082706265040079184, 5e-10),
    (3.5 + 2.5j, 0.7, 2.189478314163880679 + 2.5498469282116385727j, 5e-14),
    (0.5 + 3.0j, 2.0, -0.46726332902576711608 - 0.078896513425833382656j, 5e-14),
]

MULTI_FROZEN = [
    (2, 4.5, 0.8, 2.9211585683948169345),
    (3, 6.5, 1.3, 0.19899538884210507896),
    (4, 9.0, 0.5, 512.10698997175251677),
    (2, 3.5 + 1.5j, 1.0, 1.0203329025833505533 - 0.24800657305213289087j),
]

# sympy: (-1)^m m! [t^m] e^(-xt)/(1-e^(-t))^n
NEG_FROZEN = [
    (2, 2, Fr(1, 3), Fr(-119, 9720)),
    (3, 1, Fr(3, 4), Fr(403, 30720)),
    (1, 4, Fr(1, 5), Fr(74, 15625)),
    (2, 0, Fr(0), Fr(5, 12)),
    (4, 3, Fr(1, 2), Fr(13, 21504)),
]


@pytest.mark.parametrize("s,x,value,tol", ZETA_FROZEN)
def test_hurwitz_zeta_frozen(s, x, value, tol):
    got = hurwitz_zeta(s, x)
    assert abs(got - value) / abs(value) < tol


def test_pole_and_domain_signals():
    with pytest.raises(PoleError) as err:
        hurwitz_zeta(1.0, 2.0)
    assert err.value.signal == "pole"
    with pytest.raises(DomainError) as err:
        hurwitz_zeta(2.0, 0.0)
    assert err.value.signal == "domain"
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, -1.5)


def test_neg_integer_values_are_bernoulli():
    for m in range(8):
        for x in (Fr(1, 4), Fr(1), Fr(3, 2)):
            assert hurwitz_zeta_neg(m, x) == -bernoulli_poly(m + 1)(x) / (m + 1)
    assert hurwitz_zeta_neg(2, Fr(1, 3)) == Fr(-1, 81)


def test_continuation_meets_exact_values():
    # The float continuation should land on the exact rational numbers.
    for m in (0, 1, 2, 3):
        exact = float(hurwitz_zeta_neg(m, Fr(5, 4)))
        got = hurwitz_zeta(-m, 1.25).real
        assert got == pytest.approx(exact, rel=2e-11, abs=1e-13)


def test_default_shift_count_scales_with_s():
    assert default_shift_count(2.0, 1.0) == 10
    assert default_shift_count(30.0, 1.0) == 60
    assert default_shift_count(2.0, 50.0) == 0


def test_doubling_stability_spot():
    s, x = 6.5 - 2.0j, 0.9
    n0 = default_shift_count(s, x)
    base = hurwitz_zeta(s, x, EvalParams(shift_count=n0, depth=15))
    doubled = hurwitz_zeta(s, x, EvalParams(shift_count=2 * n0, depth=30))
    assert abs(base - doubled) / abs(doubled) < 1e-13


# -- order-n routes --------------------------------------------------------


@pytest.mark.parametrize("n,s,x,value", MULTI_FROZEN)
def test_multi_hurwitz_frozen(n, s, x, value):
    assert abs(multi_hurwitz(n, s, x) - value) / abs(value) < 5e-13
    if complex(s).real > n + 1:
        got = multi_hurwitz_series(n, s, x)
        assert abs(got - value) / abs(value) < 5e-13


def test_two_term_ladder():
    # zeta_2(s, x) = (1 - x) zeta(s, x) + zeta(s - 1, x)
    for s, x in ((4.0, 0.7), (3.5 + 1.0j, 1.4), (6.0, 2.2)):
        direct = multi_hurwitz(2, s, x)
        combo = (1 - x) * hurwitz_zeta(s, x) + hurwitz_zeta(s - 1, x)
        assert abs(direct - combo) / abs(combo) < 1e-12


def test_reduction_and_series_cross_routes():
    for n in (1, 2, 3, 4):
        for x in (0.6, 1.0, 1.7):
            s = n + 2.5
            a = multi_hurwitz(n, s, x)
            b = multi_hurwitz_series(n, s, x)
            assert abs(a - b) / abs(b) < 5e-12


def test_stirling_form_agrees_with_norlund_form():
    for n in (1, 2, 3, 4, 5):
        for x in (0.6, 1.3):
            s = n + 1.75
            a = multi_hurwitz(n, s, x)
            b = second_corollary1_form(n, s, x)
            assert abs(a - b) / abs(b) < 1e-11


def test_multi_hurwitz_pole_grid():
    for n in (1, 2, 3):
        for k in range(1, n + 1):
            with pytest.raises(PoleError):
                multi_hurwitz(n, float(k), 0.8)
    # Just past the top pole is fine again.
    assert multi_hurwitz(3, 3.5, 0.8) != 0


def test_series_route_guards():
    with pytest.raises(DivergenceError) as err:
        multi_hurwitz_series(2, 3.0, 1.0)  # needs Re(s) > 3
    assert err.value.signal == "divergent-region"
    with pytest.raises(DomainError):
        multi_hurwitz_series(2, 4.5, 0.0)
    with pytest.raises(ValueError):
        multi_hurwitz_series(0, 4.5, 1.0)


@pytest.mark.parametrize("n,m,x,value", NEG_FROZEN)
def test_exact_negative_values_frozen(n, m, x, value):
    assert multi_hurwitz_neg(n, m, x) == value
    assert multi_hurwitz_neg_reduction(n, m, x) == value


def test_negative_value_routes_agree_on_grid():
    for n in range(1, 5):
        for m in range(6):
            for x in (Fr(0), Fr(1, 4), Fr(1), Fr(3, 2)):
                assert multi_hurwitz_neg(n, m, x) == multi_hurwitz_neg_reduction(n, m, x)


# -- the shared summation engine -------------------------------------------


def test_polynomial_dirichlet_sum_plain_zeta():
    got = polynomial_dirichlet_sum([1.0], lambda u: 1, 4.5, 2.3, 1e-13, "test")
    assert abs(got - 0.030762086170147935971) < 1e-14


def test_polynomial_dirichlet_sum_linear_weight():
    # weight v = x + u  ->  zeta(s - 1, x)
    s, x = 5.5, 0.8
    got = polynomial_dirichlet_sum(
        [0.0, 1.0], lambda u: x + u, s, x, 1e-13, "test"
    )
    want = hurwitz_zeta(s - 1, x)
    assert abs(got - want) / abs(want) < 1e-12
