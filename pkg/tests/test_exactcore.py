"""Exact combinatorial kernels against brute-force counting oracles.

The Stirling triangles are checked two ways: small rows against literal
enumeration (set partitions, permutation cycles), larger rows against
values frozen from an independent computer-algebra run.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from multizeta.exactcore import (
    StirlingTable,
    binomial,
    format_rational,
    iter_compositions,
    kronecker_orthogonality,
    multinomial,
    parse_rational,
    stirling1_unsigned,
    stirling2,
)

# Frozen with sympy.functions.combinatorial.numbers.stirling.
S2_ROW_10 = (0, 1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1)
C1_ROW_9 = (0, 40320, 109584, 118124, 67284, 22449, 4536, 546, 36, 1)


def partitions_into_blocks(items):
    """Every partition of `items` into nonempty blocks, by brute force."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in partitions_into_blocks(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


@pytest.mark.parametrize("n", range(8))
def test_stirling2_counts_set_partitions(n):
    counts = [0] * (n + 1)
    for part in partitions_into_blocks(list(range(n))):
        counts[len(part)] += 1
    assert [stirling2(n, k) for k in range(n + 1)] == counts


@pytest.mark.parametrize("n", range(8))
def test_stirling1_counts_permutation_cycles(n):
    counts = [0] * (n + 1)
    for perm in permutations(range(n)):
        counts[cycle_count(perm)] += 1
    assert [stirling1_unsigned(n, k) for k in range(n + 1)] == counts


def test_frozen_rows():
    assert tuple(stirling2(10, k) for k in range(11)) == S2_ROW_10
    assert tuple(stirling1_unsigned(9, k) for k in range(10)) == C1_ROW_9


def test_stirling_out_of_triangle_is_zero():
    assert stirling2(5, 9) == 0
    assert stirling2(5, -1) == 0
    assert stirling1_unsigned(0, 1) == 0
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_stirling1_rows_sum_to_factorial():
    for n in range(12):
        assert sum(stirling1_unsigned(n, k) for k in range(n + 1)) == factorial(n)


def test_table_grows_and_reuses():
    table = StirlingTable("second")
    assert table.max_n == 0
    row = table.row(6)
    assert row[2] == 31  # S(6, 2)
    assert table.max_n == 6
    assert table.row(6) is row
    with pytest.raises(ValueError):
        StirlingTable("third")


@pytest.mark.parametrize(
    "n,m,expected",
    [(0, 0, 1), (3, 3, -1), (4, 4, 1), (4, 2, 0), (7, 3, 0), (6, 6, 1)],
)
def test_kronecker_orthogonality(n, m, expected):
    assert kronecker_orthogonality(n, m) == expected


@given(st.integers(0, 12), st.integers(0, 12))
def test_orthogonality_property(n, m):
    assert kronecker_orthogonality(n, m) == ((-1) ** n if n == m else 0)


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_multinomial_values_and_validation():
    assert multinomial(4, (2, 1, 1)) == 12
    assert multinomial(10, (3, 3, 4)) == 4200
    assert multinomial(0, ()) == 1
    with pytest.raises(ValueError):
        multinomial(4, (2, 1))  # parts do not sum to n
    with pytest.raises(ValueError):
        multinomial(4, (5, -1))


@given(st.integers(0, 8), st.integers(1, 4))
def test_compositions_complete_and_distinct(total, slots):
    seen = list(iter_compositions(total, slots))
    assert len(seen) == len(set(seen)) == comb(total + slots - 1, slots - 1)
    assert all(len(c) == slots and sum(c) == total for c in seen)


def test_compositions_reject_zero_slots():
    with pytest.raises(ValueError):
        list(iter_compositions(3, 0))


def test_format_rational():
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(7) == "7"


@given(st.fractions(max_denominator=10**6))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_parse_rational_accepts_decimals():
    assert parse_rational(" 0.125 ") == Fraction(1, 8)
    assert parse_rational("-3/4") == Fraction(-3, 4)
