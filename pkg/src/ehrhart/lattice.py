"""Lattice-point counting in dilates of rational polytopes.

Three independent counting paths are provided:

``bounding_box``
    scan the integer points of the bounding box of tP and test the facet
    inequalities.  For full-dimensional P the innermost coordinate is
    resolved as an exact integer interval instead of point by point; for
    lower-dimensional P the affine-hull equations fix the pivot coordinates
    so only the free ones are scanned.
``simplex_barycentric``
    simplices only: solve for barycentric coordinates of every box point.
``triangulation_ie``
    sum relative-interior counts of the faces of a pulling triangulation,
    each face counted barycentrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .exact import binomial, rref, solve_linear
from .polytope import CLOSED, RELATIVE_INTERIOR, Polytope

BOUNDING_BOX = "bounding_box"
SIMPLEX_BARYCENTRIC = "simplex_barycentric"
TRIANGULATION_IE = "triangulation_ie"
METHODS = (BOUNDING_BOX, SIMPLEX_BARYCENTRIC, TRIANGULATION_IE)

_MODES = {"closed": CLOSED, "interior": RELATIVE_INTERIOR,
          CLOSED: CLOSED, RELATIVE_INTERIOR: RELATIVE_INTERIOR}


def _mode(mode):
    try:
        return _MODES[mode]
    except KeyError:
        raise ValueError(f"unknown counting mode {mode!r}") from None


@dataclass(frozen=True)
class CountReport:
    t: int
    closed: int
    interior: int
    method: str

    @property
    def boundary(self) -> int:
        return self.closed - self.interior

    def as_dict(self) -> dict:
        return {"t": self.t, "closed": self.closed, "interior": self.interior,
                "boundary": self.boundary, "method": self.method}


def _integer_bounds(P: Polytope, t: int, mode: str) -> list[tuple[tuple, int]]:
    """Facet inequalities of tP as integer pairs (a, b) meaning a.x <= b for
    lattice points x (strict inequalities already tightened)."""
    out = []
    for a, c in P.facets:
        rhs = c * t
        if mode == CLOSED:
            b = math.floor(rhs)
        else:
            b = math.ceil(rhs) - 1
        out.append((a, b))
    return out


def _box(P: Polytope, t: int) -> list[range]:
    return [range(math.ceil(lo * t), math.floor(hi * t) + 1) for lo, hi in P.bounding_box()]


def _full_dim_slices(P, t, mode):
    """Yield (prefix, lo, hi): lattice points of tP are prefix + (k,) for
    lo <= k <= hi."""
    n = P.ambient_dim
    bounds = _integer_bounds(P, t, mode)
    box = _box(P, t)
    last = box[-1]
    for prefix in product(*box[:-1]):
        lo, hi = last.start, last.stop - 1
        for a, b in bounds:
            s = 0
            for k in range(n - 1):
                s += a[k] * prefix[k]
            r = b - s
            an = a[-1]
            if an > 0:
                hi = min(hi, r // an)
            elif an < 0:
                lo = max(lo, -(r // -an))
            elif r < 0:
                hi = lo - 1
            if lo > hi:
                break
        if lo <= hi:
            yield prefix, lo, hi


def _affine_points(P, t, mode):
    """Lattice points of tP for lower-dimensional P: scan free coordinates,
    solve for the pivot ones."""
    n = P.ambient_dim
    rows = [list(a) + [c * t] for a, c in P.affine_hull]
    red, pivots = rref(rows)
    free = [k for k in range(n) if k not in pivots]
    box = _box(P, t)
    if any(len(r) == 0 for r in box):
        return
    bounds = _integer_bounds(P, t, mode)
    for vals in product(*(box[k] for k in free)):
        x = [0] * n
        for k, v in zip(free, vals):
            x[k] = v
        ok = True
        for i, p in enumerate(pivots):
            xp = red[i][n] - sum((red[i][k] * x[k] for k in free), Fraction(0))
            if xp.denominator != 1 or xp.numerator not in box[p]:
                ok = False
                break
            x[p] = xp.numerator
        if not ok:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in bounds):
            yield tuple(x)


def lattice_points(P: Polytope, t: int = 1, mode: str = "closed") -> Iterator[tuple]:
    """Lattice points of tP (closed) or of its relative interior, t >= 1."""
    mode = _mode(mode)
    if t < 1:
        raise ValueError("lattice_points needs t >= 1")
    if P.dim == P.ambient_dim and P.ambient_dim > 0:
        for prefix, lo, hi in _full_dim_slices(P, t, mode):
            for k in range(lo, hi + 1):
                yield prefix + (k,)
    else:
        yield from _affine_points(P, t, mode)


def _count_bounding_box(P, t, mode):
    if P.dim == P.ambient_dim and P.ambient_dim > 0:
        return sum(hi - lo + 1 for _, lo, hi in _full_dim_slices(P, t, mode))
    return sum(1 for _ in _affine_points(P, t, mode))


def _barycentric_matrix(vertices):
    """Integer matrix M and scale K with K * a == M @ (x, t) for the
    barycentric coordinates a (summing to t) of any x on the affine hull.

    Also returns the integer matrix A = [[v_i], [1]] used to check that x
    really lies on the hull (A @ M @ (x, t) == K * (x, t)).
    """
    n = len(vertices[0])
    cols = [list(v) + [1] for v in vertices]
    m = len(cols)
    left = []
    for j in range(m):
        e = [Fraction(int(i == j)) for i in range(m)]
        y, _ = solve_linear(cols, e)
        if y is None:
            raise ValueError("vertices are not affinely independent")
        left.append(y)
    K = math.lcm(*(q.denominator for row in left for q in row))
    M = [[int(q * K) for q in row] for row in left]
    lcm_cols = math.lcm(*(Fraction(c).denominator for col in cols for c in col))
    A = [[int(cols[j][i] * lcm_cols) for j in range(m)] for i in range(n + 1)]
    return M, K, A, lcm_cols


def _box_array(ranges):
    grids = np.meshgrid(*[np.arange(r.start, r.stop, dtype=np.int64) for r in ranges], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1) if grids else np.zeros((1, 0), dtype=np.int64)


def _count_barycentric(P, t, mode):
    if not P.is_simplex:
        raise ValueError("barycentric counting needs a simplex")
    M, K, A, L = _barycentric_matrix(P.vertices)
    box = _box(P, t)
    if any(len(r) == 0 for r in box):
        return 0
    size = math.prod(len(r) for r in box)
    bound = max(abs(r.start) + abs(r.stop) for r in box) + abs(t) + 1
    big = max(abs(v) for row in M + A for v in row) + K + L + 1
    if size > 5_000_000 or (bound * big) ** 2 * (len(box) + 2) ** 2 > 2 ** 62:
        return _count_barycentric_slow(P, t, mode)
    X = _box_array(box)
    rhs = np.hstack([X, np.full((X.shape[0], 1), t, dtype=np.int64)])
    scaled = rhs @ np.array(M, dtype=np.int64).T          # K * a
    back = scaled @ np.array(A, dtype=np.int64).T         # K * L * (x, t)
    on_hull = np.all(back == K * L * rhs, axis=1)
    if mode == RELATIVE_INTERIOR:
        inside = np.all(scaled > 0, axis=1)
    else:
        inside = np.all(scaled >= 0, axis=1)
    return int(np.count_nonzero(on_hull & inside))


def _count_barycentric_slow(P, t, mode):
    M, K, A, L = _barycentric_matrix(P.vertices)
    strict = mode == RELATIVE_INTERIOR
    total = 0
    for x in product(*_box(P, t)):
        rhs = list(x) + [t]
        a = [sum(mi * r for mi, r in zip(row, rhs)) for row in M]
        if any(sum(ai * aj for ai, aj in zip(row, a)) != K * L * r for row, r in zip(A, rhs)):
            continue
        total += all(ai > 0 for ai in a) if strict else all(ai >= 0 for ai in a)
    return total


@lru_cache(maxsize=64)
def _triangulated_faces(P):
    from .triangulation import pulling_triangulation

    T = pulling_triangulation(P)
    polys = {f: T.face_polytope(f) for f in T.faces}
    return [(polys[f], T.boundary_flags[f]) for f in T.faces]


def _count_triangulation(P, t, mode):
    total = 0
    for face, on_boundary in _triangulated_faces(P):
        if mode == CLOSED or not on_boundary:
            total += _count_barycentric(face, t, RELATIVE_INTERIOR)
    return total


def count(P: Polytope, t: int, mode: str = "closed", method: str = BOUNDING_BOX) -> int:
    """#(tP ∩ Z^n) or, in interior mode, #(tP° ∩ Z^n), for t >= 1."""
    mode = _mode(mode)
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"count needs a positive integer t, got {t!r}")
    if method == BOUNDING_BOX:
        return _count_bounding_box(P, t, mode)
    if method == SIMPLEX_BARYCENTRIC:
        return _count_barycentric(P, t, mode)
    if method == TRIANGULATION_IE:
        return _count_triangulation(P, t, mode)
    raise ValueError(f"unknown counting method {method!r}")


def count_report(P: Polytope, t: int, method: str = BOUNDING_BOX) -> CountReport:
    return CountReport(t, count(P, t, CLOSED, method), count(P, t, RELATIVE_INTERIOR, method), method)


def ell(P: Polytope, t: int) -> int:
    """The signed counting function: closed count for t > 0, 1 at t = 0,
    (-1)^dim times the interior count of |t|P for t < 0."""
    if t > 0:
        return count(P, t, CLOSED)
    if t == 0:
        return 1
    return (-1) ** P.dim * count(P, -t, RELATIVE_INTERIOR)


def boundary_count(P: Polytope, t: int) -> int:
    return count(P, t, CLOSED) - count(P, t, RELATIVE_INTERIOR)


@dataclass
class CoveringReport:
    t: int
    q_union_count: int
    deficiency_points: list
    recurrence_lhs: int
    recurrence_rhs: int
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.recurrence_lhs == self.recurrence_rhs and all(self.checks.values())


def _shifted(points, shift, sign=1):
    """{shift + sign * p}"""
    return {tuple(s + sign * p for s, p in zip(shift, pt)) for pt in points}


def _points_of_dilate(S, k, mode="closed"):
    """Lattice points of kS for k >= 0, where 0S is the origin."""
    if k == 0:
        if mode == "closed" or S.dim == 0:
            return {tuple([0] * S.ambient_dim)}
        return set()
    return set(lattice_points(S, k, mode))


def verify_covering(S: Polytope, t: int) -> CoveringReport:
    """Check the covering of (t+d+1)S by the translates Q_i = (t+d)S + v_i.

    For t >= 0 the union must be all of (t+d+1)S.  For -d-1 <= t < 0 the
    uncovered lattice points are compared with P' minus Q' where
    P' = tS° + sum v_i and Q'_j = (t+1)S° + sum_{i != j} v_i.
    """
    if not S.is_simplex:
        raise ValueError("covering construction needs a simplex")
    if not S.is_integral:
        raise ValueError("covering construction needs integral vertices")
    d = S.dim
    if t < -d - 1:
        raise ValueError(f"t must be >= {-d - 1}")
    verts = [tuple(int(x) for x in v) for v in S.vertices]
    n = S.ambient_dim
    m = t + d + 1
    big = _points_of_dilate(S, m)

    union = set()
    if t + d >= 0:
        base = _points_of_dilate(S, t + d)
        for v in verts:
            union |= _shifted(base, v)
    checks = {"union_inside": union <= big}

    ie = sum((-1) ** (k + 1) * binomial(d + 1, k) * ell(S, m - k)
             for k in range(1, min(d + 1, m) + 1))
    checks["inclusion_exclusion"] = len(union) == ie

    deficiency = sorted(big - union)
    if t >= 0:
        checks["covers"] = not deficiency
    else:
        total = tuple(sum(v[k] for v in verts) for k in range(n))
        p_prime = _shifted(_points_of_dilate(S, -t, "interior"), total, -1)
        q_prime = set()
        if t < -1:
            inner = _points_of_dilate(S, -(t + 1), "interior")
            for j in range(d + 1):
                rest = tuple(total[k] - verts[j][k] for k in range(n))
                q_prime |= _shifted(inner, rest, -1)
        checks["deficiency_matches"] = (p_prime - q_prime) == set(deficiency)
        expected_q_prime = sum((-1) ** (k + 1) * binomial(d + 1, k) * (-1) ** d * ell(S, t + k)
                               for k in range(1, -(t + 1) + 1))
        checks["q_prime_count"] = len(q_prime) == expected_q_prime

    lhs = ell(S, m)
    rhs = sum((-1) ** (d - k) * binomial(d + 1, k) * ell(S, t + k) for k in range(d + 1))
    checks["disjoint_union"] = lhs == len(union) + len(deficiency)
    return CoveringReport(t, len(union), deficiency, lhs, rhs, checks)
