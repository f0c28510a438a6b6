import math
import random
from fractions import Fraction
from itertools import product

import pytest

from ehrhart import corpus
from ehrhart.engine import (
    Polynomial,
    VerificationError,
    coefficient_report,
    ehrhart_polynomial,
    hstar_numerator,
    interpolate,
    pick_report,
    quasi_polynomial,
    recurrence_check,
    reciprocity_check,
    reciprocity_table,
    shoelace_area,
)
from ehrhart.lattice import count, ell
from ehrhart.polytope import build_polytope

from conftest import brute_count

F = Fraction


def reeve_poly(h):
    return Polynomial((1, 2 - F(h, 6), 1, F(h, 6)))


@pytest.mark.parametrize("h", range(1, 14))
def test_reeve(h):
    assert ehrhart_polynomial(corpus.reeve(h)) == reeve_poly(h)


def test_reeve_13_negative_linear_coefficient():
    assert ehrhart_polynomial(corpus.reeve(13)).coefficient(1) == F(-1, 6)


def test_pick_triangle_polynomial(pick_triangle):
    L = ehrhart_polynomial(pick_triangle)
    assert L == Polynomial((1, 2, 1))
    assert L(3) == 16 == brute_count(pick_triangle, 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_unit_cube(d):
    L = ehrhart_polynomial(corpus.unit_cube(d))
    for t in range(0, 8):
        # product oracle: t+1 choices per coordinate
        assert L(t) == (t + 1) ** d
    assert L == Polynomial([math.comb(d, k) for k in range(d + 1)])


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_standard_simplex(d):
    L = ehrhart_polynomial(corpus.standard_simplex(d))
    for t in range(0, 6):
        stars = sum(1 for x in product(range(t + 1), repeat=d) if sum(x) <= t)
        assert L(t) == stars == math.comb(t + d, d)


def test_rejects_rational():
    with pytest.raises(ValueError):
        ehrhart_polynomial(corpus.half_segment())


def test_interpolate_exact():
    p = interpolate([0, 1, 2], [1, 4, 9])
    assert p.coeffs == (1, 2, 1)
    q = interpolate([1, 3, 5], [F(1, 2), 2, F(9, 2)])
    assert all(q(x) == y for x, y in [(1, F(1, 2)), (3, 2), (5, F(9, 2))])


def test_recurrence_examples():
    assert recurrence_check([1, 4, 9, 16, 25], 2)
    assert not recurrence_check([1, 2, 4, 8], 1)
    assert recurrence_check([7, 7, 7, 7], 0)
    with pytest.raises(ValueError):
        recurrence_check([1, 2], 1)


def test_recurrence_equivalent_to_polynomiality():
    rng = random.Random(2)
    for _ in range(50):
        d = rng.randint(0, 4)
        coeffs = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d + 1)]
        p = Polynomial(coeffs)
        seq = [p(t) for t in range(d + 6)]
        assert recurrence_check(seq, d)
        if p.degree == d and d >= 1:
            assert not recurrence_check(seq, d - 1)
    for d in range(3):
        assert not recurrence_check([2 ** k for k in range(d + 4)], d)


def test_hstar_examples():
    assert hstar_numerator(ehrhart_polynomial(corpus.standard_simplex(2))).coeffs == (1, 0, 0)
    assert hstar_numerator(ehrhart_polynomial(corpus.unit_square())).coeffs == (1, 1, 0)
    assert hstar_numerator(ehrhart_polynomial(corpus.reeve(2))).coeffs == (1, 0, 1, 0)


def _series_times_one_minus_z(values, d):
    """Truncated product (sum values[t] z^t) * (1 - z)^(d+1)."""
    factor = [(-1) ** j * math.comb(d + 1, j) for j in range(d + 2)]
    return [sum(factor[j] * values[k - j] for j in range(min(k, d + 1) + 1)) for k in range(len(values))]


@pytest.mark.parametrize("name", sorted(corpus.integral_corpus()))
def test_hstar_against_series(name, integral_corpus):
    P = integral_corpus[name]
    d = P.dim
    L = ehrhart_polynomial(P)
    h = hstar_numerator(L, d)
    series = _series_times_one_minus_z([L(t) for t in range(d + 6)], d)
    assert list(h.coeffs) == series[:d + 1]
    assert all(c == 0 for c in series[d + 1:])
    assert h.coeffs[0] == 1 and all(c >= 0 for c in h.coeffs)
    assert sum(h.coeffs) == math.factorial(d) * L.coefficient(d)


def test_hstar_rejects_non_integer():
    with pytest.raises(ValueError):
        hstar_numerator(Polynomial((F(1, 2), 1)))


def test_reciprocity_examples(pick_triangle):
    rows = reciprocity_table(pick_triangle, 4)
    assert [r[2] for r in rows] == [0, 1, 4, 9]
    assert all(r[1] == (r[0] - 1) ** 2 for r in rows)
    assert reciprocity_check(corpus.unit_cube(3), 4)
    L = ehrhart_polynomial(corpus.unit_cube(3))
    assert all(-L(-t) == (t - 1) ** 3 for t in range(1, 6))


def test_pick_equation_interior_polynomial(pick_triangle):
    # interior count of tP equals L(-t) for polygons
    L = ehrhart_polynomial(pick_triangle)
    for t in range(1, 6):
        assert L(-t) == count(pick_triangle, t, "interior")


def test_quasi_half_segment():
    q = quasi_polynomial(corpus.half_segment())
    assert q.period == 2 and q.minimal_period == 2
    assert q.constituents[0] == Polynomial((1, F(1, 2)))
    assert q.constituents[1] == Polynomial((F(1, 2), F(1, 2)))
    for t in range(0, 12):
        assert q(t) == t // 2 + 1


def test_quasi_half_square():
    P = corpus.half_square()
    q = quasi_polynomial(P)
    assert q.period == 2 and q.minimal_period == 2
    assert q.constituents == (Polynomial((1, 2, 1)), Polynomial((0, 0, 1)))
    for t in range(1, 7):
        assert q(t) == brute_count(P, t)


def test_quasi_integral(pick_triangle):
    q = quasi_polynomial(pick_triangle)
    assert q.period == 1 and q.constituents == (ehrhart_polynomial(pick_triangle),)


def test_quasi_period_collapse_reported():
    # triangle (0,0), (1,0), (0,1/2) scaled... use a segment [0, 1] written with a
    # rational vertex that is not a vertex: denominator stays 1
    P = build_polytope([(0, 0), (F(1, 2), 0), (1, 0)])
    assert quasi_polynomial(P).period == 1
    # a rational triangle whose quasi-polynomial has period 2
    Q = build_polytope([(0, 0), (1, 0), (0, F(1, 2))])
    q = quasi_polynomial(Q)
    assert q.period == 2 and 2 % q.minimal_period == 0


def test_quasi_random_simplices():
    rng = random.Random(7)
    for _ in range(6):
        S = corpus.random_rational_simplex(rng, rng.randint(1, 3))
        q = quasi_polynomial(S)
        assert S.denominator % q.minimal_period == 0
        for t in range(1, 3 * S.denominator + 1):
            assert q(t) == count(S, t)
        assert q.degree == S.dim


def test_pick_examples(pick_triangle):
    r = pick_report(pick_triangle)
    assert (r.A, r.B, r.I, r.pick_holds, r.polynomial_matches) == (1, 4, 0, True, True)
    r = pick_report(corpus.unit_square())
    assert (r.A, r.B, r.I, r.pick_holds) == (1, 4, 0, True)
    r = pick_report(build_polytope([(0, 0), (3, 0), (0, 3)]))
    assert (r.A, r.B, r.I, r.pick_holds) == (F(9, 2), 9, 1, True)


def test_pick_rejects():
    with pytest.raises(ValueError):
        pick_report(corpus.unit_cube(3))
    with pytest.raises(ValueError):
        pick_report(corpus.half_square())


def test_shoelace_independent_of_input_order():
    pts = [(0, 0), (4, 0), (5, 2), (3, 4), (0, 3)]
    # fan from the origin: cross products 8, 14, 9 halved
    expected = F(8 + 14 + 9, 2)
    rng = random.Random(1)
    for _ in range(5):
        rng.shuffle(pts)
        assert shoelace_area(build_polytope(pts)) == expected


def test_coefficient_report():
    for h in (1, 2, 13):
        assert coefficient_report(corpus.reeve(h)) == (F(h, 6), 1, 1)
    assert coefficient_report(corpus.diagonal_segment()) == (2, 1, 1)
    vol, half_surface, c0 = coefficient_report(corpus.unit_cube(3))
    assert (vol, half_surface, c0) == (1, 3, 1)
    L = ehrhart_polynomial(corpus.unit_cube(3))
    assert L(1) - (-1) ** 3 * L(-1) == 8 == count(corpus.unit_cube(3), 1) - count(corpus.unit_cube(3), 1, "interior")


def test_coefficient_report_detects_wrong_polynomial(pick_triangle):
    with pytest.raises(VerificationError):
        coefficient_report(pick_triangle, Polynomial((1, 3, 1)))


@pytest.mark.parametrize("name", sorted(corpus.integral_corpus()))
def test_signed_recurrence(name, integral_corpus):
    P = integral_corpus[name]
    d = P.dim
    seq = [ell(P, t) for t in range(-(d + 3), d + 4)]
    assert recurrence_check(seq, d)
    L = ehrhart_polynomial(P)
    assert all(L(t) == v for t, v in zip(range(-(d + 3), d + 4), seq))


from hypothesis import assume, given, settings, strategies as st  # noqa: E402

coord = st.integers(-2, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(st.tuples(*[coord] * d), min_size=d + 1, max_size=d + 1)))
def test_random_lattice_simplex_properties(pts):
    P = build_polytope(pts)
    assume(P.dim == P.ambient_dim and P.is_simplex)
    L = ehrhart_polynomial(P)
    h = hstar_numerator(L, P.dim)
    assert h.coeffs[0] == 1 and min(h.coeffs) >= 0
    assert sum(h.coeffs) == math.factorial(P.dim) * L.coefficient(P.dim)
    assert reciprocity_check(P, 3)
