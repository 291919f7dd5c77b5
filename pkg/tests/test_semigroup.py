from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal.semigroup import (
    bl_check_unicuspidal,
    build_membership,
    counting_R,
    generators_from_newton,
)


def naive_members(generators, bound):
    """Plain combination enumerator: nested loops over multiples."""
    sums = {0}
    for g in generators:
        sums = {s + m * g for s in sums for m in range((bound - s) // g + 1)}
    return {s for s in sums if s <= bound}


def test_generator_examples():
    assert generators_from_newton(((2, 3), (2, 5), (2, 3))) == (8, 12, 34, 71)
    assert generators_from_newton(((2, 13),)) == (2, 13)
    assert generators_from_newton(((4, 5),)) == (4, 5)
    assert generators_from_newton(()) == (1,)


def _series_mul(f, g, bound):
    out = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = ea + eb
            if e <= bound:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _valuation_semigroup(x_series, y_series, bound):
    """Leading t-orders of the subring generated by two power series, by
    Gaussian elimination on the truncated monomials x^i y^j."""
    vx = min(x_series)
    vy = min(y_series)
    monomials = []
    one = {0: Fraction(1)}
    for i in range((bound // vx) + 1):
        for j in range((bound // vy) + 1):
            if i * vx + j * vy > bound:
                break
            m = one
            for _ in range(i):
                m = _series_mul(m, x_series, bound)
            for _ in range(j):
                m = _series_mul(m, y_series, bound)
            if m:
                monomials.append(m)
    basis = {}
    for m in sorted(monomials, key=min):
        while m:
            v = min(m)
            if v not in basis:
                basis[v] = m
                break
            pivot = basis[v]
            scale = m[v] / pivot[v]
            m = {
                e: c
                for e in set(m) | set(pivot)
                if (c := m.get(e, 0) - scale * pivot.get(e, 0))
            }
    return set(basis)


def test_generators_against_vanishing_orders():
    # the branch (t^8, t^12 + t^22 + t^25) must realize exactly the
    # semigroup generated by (8, 12, 34, 71)
    frac = Fraction(1)
    x = {8: frac}
    y = {12: frac, 22: frac, 25: frac}
    bound = 130  # past the conductor 2*delta = 110
    achieved = _valuation_semigroup(x, y, bound)
    table = build_membership((8, 12, 34, 71), bound)
    assert achieved == set(table.members())
    gaps = bound + 1 - len(achieved)
    assert gaps == 55  # delta of the degree-12 curve


def test_generators_against_vanishing_orders_two_pairs():
    # (t^6, t^15 + t^16) has characteristic data (6; 15, 16) and
    # generators (6, 15, 31)
    assert generators_from_newton(((2, 5), (3, 1))) == (6, 15, 31)
    frac = Fraction(1)
    achieved = _valuation_semigroup({6: frac}, {15: frac, 16: frac}, 90)
    assert achieved == set(build_membership((6, 15, 31), 90).members())


def test_membership_examples():
    assert build_membership((2, 3), 6).members() == (0, 2, 3, 4, 5, 6)
    assert build_membership((4, 5), 3).members() == (0,)
    assert build_membership((3, 7), 10).members() == (0, 3, 6, 7, 9, 10)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(1, 40), min_size=1, max_size=4),
    st.integers(0, 200),
)
def test_membership_matches_naive(generators, bound):
    table = build_membership(tuple(generators), bound)
    assert set(table.members()) == naive_members(generators, bound)


def test_counting_examples():
    w23 = build_membership((2, 3), 20)
    assert counting_R(w23, 4) == 3
    assert counting_R(w23, 1) == 1
    assert counting_R(w23, 0) == 0
    assert counting_R(w23, -7) == 0
    with pytest.raises(ValueError, match="exceeds table bound"):
        counting_R(w23, 22)


def test_counting_monotone_steps():
    table = build_membership((5, 7, 11), 120)
    previous = 0
    for k in range(1, 122):
        value = counting_R(table, k)
        assert value - previous in (0, 1)
        previous = value


def test_counts_below_matches_pointwise():
    table = build_membership((8, 12, 34, 71), 130)
    points = [0, 1, 13, 25, 49, 97, 110, 131]
    assert table.counts_below(points) == [counting_R(table, k) for k in points]


def test_single_pair_gap_count():
    # for a single pair the number of gaps equals (a-1)(b-1)/2
    for a, b in [(2, 3), (3, 4), (4, 5), (2, 13), (3, 22), (6, 43)]:
        delta = (a - 1) * (b - 1) // 2
        bound = 2 * delta + 20
        table = build_membership((a, b), bound)
        assert counting_R(table, bound + 1) == bound + 1 - delta


def test_bl_check_examples():
    assert bl_check_unicuspidal(3, (2, 3)).passed
    assert bl_check_unicuspidal(5, (2, 13)).passed
    verdict = bl_check_unicuspidal(5, (3, 7))
    assert not verdict.passed
    assert verdict.first_failing_j == 1
    assert verdict.failing_count == 2
    assert verdict.failing_expected == 3


def test_bl_check_validation():
    with pytest.raises(ValueError, match="numerical semigroup"):
        bl_check_unicuspidal(5, (4, 6))
    with pytest.raises(ValueError, match="bound"):
        bl_check_unicuspidal(10, (2, 3), bound=5)


def test_bl_accepts_all_listed_curves():
    from cuspidal.tables import FOUR_PAIR_ROWS, THREE_PAIR_ROWS

    for degree, pairs, _ in THREE_PAIR_ROWS + FOUR_PAIR_ROWS:
        gens = generators_from_newton(pairs)
        assert bl_check_unicuspidal(degree, gens).passed, (degree, pairs)
