from fractions import Fraction
from itertools import product

import pytest

from ehrhart import corpus
from ehrhart.exact import binomial
from ehrhart.lattice import (
    METHODS,
    boundary_count,
    count,
    count_report,
    ell,
    lattice_points,
    verify_covering,
)
from ehrhart.polytope import build_polytope

from conftest import brute_count

F = Fraction


def test_pick_triangle_counts(pick_triangle):
    assert [count(pick_triangle, t) for t in (1, 2, 3)] == [4, 9, 16]
    assert count(pick_triangle, 2, "interior") == 1
    assert list(lattice_points(pick_triangle, 2, "interior")) == [(3, 1)]


@pytest.mark.parametrize("h", range(1, 14))
def test_reeve_has_four_points(h):
    assert count(corpus.reeve(h), 1) == 4


def test_half_segment_t3():
    assert count(corpus.half_segment(), 3) == 2


def test_ell(pick_triangle):
    assert ell(pick_triangle, -1) == 0
    assert ell(pick_triangle, 0) == 1
    assert ell(build_polytope([(0,), (1,)]), -2) == -1
    assert ell(corpus.octahedron(), 0) == 1


def test_boundary_count(pick_triangle):
    assert boundary_count(pick_triangle, 1) == 4
    assert boundary_count(corpus.unit_square(), 1) == 4
    assert boundary_count(pick_triangle, 3) == 12


def test_count_report(pick_triangle):
    r = count_report(pick_triangle, 2)
    assert (r.closed, r.interior, r.boundary, r.method) == (9, 1, 8, "bounding_box")


def test_point_polytope_counts():
    P = build_polytope([(1, 2)])
    assert count(P, 3) == count(P, 3, "interior") == 1
    Q = build_polytope([(F(1, 2), 0)])
    assert count(Q, 1) == count(Q, 1, "interior") == 0
    assert count(Q, 2) == 1


def test_count_rejects_nonpositive(pick_triangle):
    with pytest.raises(ValueError):
        count(pick_triangle, 0)


OR_CASES = dict(corpus.integral_corpus())
OR_CASES.update(corpus.rational_corpus())
OR_CASES["skew_triangle"] = build_polytope([(0, 0, 0), (3, 1, 2), (1, 2, 1)])
OR_CASES["rational_tri"] = build_polytope([(F(1, 3), 0), (2, F(1, 2)), (0, F(5, 3))])
OR_CASES["hexagon"] = build_polytope([(0, 0), (4, 0), (5, 2), (3, 4), (0, 3)])


@pytest.mark.parametrize("name", sorted(OR_CASES))
def test_bounding_box_matches_brute_force(name):
    P = OR_CASES[name]
    tmax = 3 if P.ambient_dim >= 4 else 4
    for t in range(1, tmax + 1):
        for mode in ("closed", "interior"):
            assert count(P, t, mode) == brute_count(P, t, mode), (t, mode)


@pytest.mark.parametrize("name", sorted(OR_CASES))
def test_counting_oracles_agree(name):
    P = OR_CASES[name]
    tmax = 6 if P.ambient_dim <= 3 else 3
    for t in range(1, tmax + 1):
        for mode in ("closed", "interior"):
            got = {m: count(P, t, mode, m) for m in METHODS if m != "simplex_barycentric" or P.is_simplex}
            assert len(set(got.values())) == 1, (t, mode, got)


@pytest.mark.parametrize("name", sorted(OR_CASES))
def test_monotone(name):
    P = OR_CASES[name]
    seq = [count(P, t) for t in range(1, 6)]
    assert seq == sorted(seq)
    if P.dim == P.ambient_dim:
        inner = [count(P, t, "interior") for t in range(1, 6)]
        assert inner == sorted(inner)


def test_lower_dim_segment_in_3d_scans_free_coordinates_only():
    P = build_polytope([(0, 0, 0), (100, 100, 100)])
    assert count(P, 50) == 5001


def test_covering_t0(pick_triangle):
    r = verify_covering(pick_triangle, 0)
    assert r.ok and r.deficiency_points == []
    assert r.recurrence_lhs == 16 == 3 * 9 - 3 * 4 + 1
    assert r.q_union_count == 16


def test_covering_t_minus_1(pick_triangle):
    r = verify_covering(pick_triangle, -1)
    assert r.ok
    assert r.recurrence_lhs == 9 and r.recurrence_rhs == 12 - 3 + 0
    assert r.deficiency_points == []
    assert r.checks["deficiency_matches"]


def test_covering_segment():
    r = verify_covering(build_polytope([(0,), (1,)]), 0)
    assert r.ok and r.recurrence_lhs == 3 == 2 * 2 - 1


SIMPLICES = [corpus.pick_triangle(), corpus.standard_simplex(2), corpus.standard_simplex(3),
             corpus.reeve(2), corpus.reeve(5), build_polytope([(0,), (3,)]),
             build_polytope([(0, 0), (3, 1), (1, 3)]),
             build_polytope([(0, 0, 0), (2, 1, 0), (0, 1, 3)]),
             build_polytope([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 2)])]


@pytest.mark.parametrize("S", SIMPLICES, ids=repr)
def test_covering_all_t(S):
    for t in range(-S.dim - 1, 5 if S.ambient_dim < 4 else 2):
        r = verify_covering(S, t)
        assert r.ok, (t, r.checks)
        if t >= 0:
            assert not r.deficiency_points


def test_covering_nonempty_deficiency():
    S = build_polytope([(0, 0), (3, 1), (1, 3)])  # has interior points
    r = verify_covering(S, -1)
    assert r.deficiency_points and r.ok


def test_covering_rejects():
    with pytest.raises(ValueError):
        verify_covering(corpus.unit_square(), 0)
    with pytest.raises(ValueError):
        verify_covering(build_polytope([(0,), (F(1, 2),)]), 0)


@pytest.mark.parametrize("S", SIMPLICES, ids=repr)
def test_interior_recurrence_far_negative(S):
    # ell at t < 0 comes from direct interior enumeration
    d = S.dim
    for t in range(-3 * d - 6, -d - 1):
        vals = [ell(S, t + k) for k in range(d + 2)]
        lhs = vals[-1]
        rhs = sum((-1) ** (d - k) * binomial(d + 1, k) * vals[k] for k in range(d + 1))
        assert lhs == rhs


@pytest.mark.parametrize("S", SIMPLICES + [build_polytope([(F(1, 3), 0), (2, F(1, 2)), (0, F(5, 3))])], ids=repr)
def test_vectorised_barycentric_matches_scalar_loop(S):
    from ehrhart.lattice import _count_barycentric, _count_barycentric_slow

    for t in (1, 2, 3):
        for mode in ("closed", "relative_interior"):
            assert _count_barycentric(S, t, mode) == _count_barycentric_slow(S, t, mode)
