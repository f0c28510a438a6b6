"""Rational polytopes given by their vertices.

A :class:`Polytope` carries its minimal vertex list, the equations cutting
out its affine hull and the facet inequalities inside that hull.  All
normals are primitive integer vectors, so membership of a lattice point
reduces to integer comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import (
    convex_combination,
    dot,
    lcm_denominators,
    nullspace,
    primitive_integer,
    qvec,
    rank,
    rref,
    sub,
)

CLOSED = "closed"
RELATIVE_INTERIOR = "relative_interior"


@dataclass(frozen=True)
class HalfspaceDescription:
    """``equations``: pairs (a, c) meaning a.x == c.
    ``inequalities``: pairs (a, c) meaning a.x <= c."""

    equations: tuple
    inequalities: tuple

    def contains(self, x, mode=CLOSED) -> bool:
        for a, c in self.equations:
            if dot(a, x) != c:
                return False
        if mode == CLOSED:
            return all(dot(a, x) <= c for a, c in self.inequalities)
        if mode == RELATIVE_INTERIOR:
            return all(dot(a, x) < c for a, c in self.inequalities)
        raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    generators: tuple
    vertices: tuple
    dim: int
    affine_hull: tuple
    facets: tuple
    denominator: int

    @property
    def halfspaces(self) -> HalfspaceDescription:
        return HalfspaceDescription(self.affine_hull, self.facets)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    def facet_vertex_ids(self) -> list[tuple[int, ...]]:
        """For each facet, the indices of the vertices it is tight on."""
        return [tuple(i for i, v in enumerate(self.vertices) if dot(a, v) == c)
                for a, c in self.facets]

    def bounding_box(self) -> list[tuple[Fraction, Fraction]]:
        return [(min(v[k] for v in self.vertices), max(v[k] for v in self.vertices))
                for k in range(self.ambient_dim)]

    def __repr__(self):
        verts = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{verts}])"


def _direction_basis(points):
    base = points[0]
    dirs = [sub(p, base) for p in points[1:]]
    return dirs


def _affine_hull(points, n):
    """Primitive integer equations a.x == c for the affine span of points."""
    dirs = _direction_basis(points)
    normals = nullspace(dirs, n) if dirs else nullspace([], n)
    eqs = []
    for a in normals:
        a = primitive_integer(a)
        # canonical sign: first nonzero entry positive
        if next(x for x in a if x != 0) < 0:
            a = tuple(-x for x in a)
        eqs.append((a, dot(a, points[0])))
    return tuple(eqs)


def _span_basis(vectors, n):
    """A basis (as rows) of the linear span of ``vectors``."""
    red, pivots = rref(vectors)
    return [tuple(red[i]) for i in range(len(pivots))]


def _facets(vertices, dim, n):
    """Facet inequalities by exhaustive search over d-subsets of vertices.

    The normal of a candidate facet is taken inside the direction space of
    the polytope, which makes it unique up to a positive scalar.
    """
    if dim == 0:
        return ()
    v0 = vertices[0]
    basis = _span_basis([sub(v, v0) for v in vertices[1:]], n)
    found = {}
    for subset in combinations(range(len(vertices)), dim):
        pts = [vertices[i] for i in subset]
        diffs = [sub(p, pts[0]) for p in pts[1:]]
        if diffs and rank(diffs) != dim - 1:
            continue
        # coefficients c with (sum c_k basis_k) . diff == 0 for every diff
        rows = [[dot(b, df) for b in basis] for df in diffs]
        kern = nullspace(rows, dim)
        if len(kern) != 1:
            continue
        coeffs = kern[0]
        normal = tuple(sum((c * b[k] for c, b in zip(coeffs, basis)), Fraction(0))
                       for k in range(n))
        normal = primitive_integer(normal)
        off = dot(normal, pts[0])
        vals = [dot(normal, v) for v in vertices]
        if all(x <= off for x in vals):
            pass
        elif all(x >= off for x in vals):
            normal = tuple(-x for x in normal)
            off = -off
        else:
            continue
        found.setdefault((normal, off), None)
    return tuple(sorted(found))


def _validate_points(points):
    if not points:
        raise ValueError("polytope needs at least one point")
    pts = [qvec(p) for p in points]
    n = len(pts[0])
    for p in pts:
        if len(p) != n:
            raise ValueError(f"ragged coordinates: expected length {n}, got {len(p)}")
    return pts, n


def build_polytope(points: Sequence[Sequence]) -> Polytope:
    """Convex hull of finitely many rational points."""
    pts, n = _validate_points(points)
    distinct = sorted(set(pts))
    if len(distinct) == 1 or rank(_direction_basis(distinct)) == len(distinct) - 1:
        # affinely independent: every point is a vertex
        vertices = distinct
    else:
        vertices = []
        for i, p in enumerate(distinct):
            others = distinct[:i] + distinct[i + 1:]
            if convex_combination(others, p) is None:
                vertices.append(p)
    dim = rank(_direction_basis(vertices)) if len(vertices) > 1 else 0
    hull = _affine_hull(vertices, n)
    facets = _facets(vertices, dim, n)
    den = lcm_denominators(x for v in vertices for x in v)
    return Polytope(
        ambient_dim=n,
        generators=tuple(pts),
        vertices=tuple(vertices),
        dim=dim,
        affine_hull=hull,
        facets=facets,
        denominator=den,
    )


def contains(P: Polytope, x: Sequence, mode: str = CLOSED) -> bool:
    if len(x) != P.ambient_dim:
        raise ValueError(f"point has length {len(x)}, polytope lives in dimension {P.ambient_dim}")
    return P.halfspaces.contains(x, mode)


def dilate(P: Polytope, t: int) -> Polytope:
    """The dilate tP for a positive integer t."""
    if not isinstance(t, int) or t <= 0:
        raise ValueError(f"dilation factor must be a positive integer, got {t!r}")
    verts = tuple(tuple(t * x for x in v) for v in P.vertices)
    den = lcm_denominators(x for v in verts for x in v)
    return Polytope(
        ambient_dim=P.ambient_dim,
        generators=tuple(tuple(t * x for x in g) for g in P.generators),
        vertices=verts,
        dim=P.dim,
        affine_hull=tuple((a, t * c) for a, c in P.affine_hull),
        facets=tuple((a, t * c) for a, c in P.facets),
        denominator=den,
    )


def translate(P: Polytope, shift: Sequence) -> Polytope:
    shift = qvec(shift)
    verts = tuple(tuple(a + b for a, b in zip(v, shift)) for v in P.vertices)
    return Polytope(
        ambient_dim=P.ambient_dim,
        generators=tuple(tuple(a + b for a, b in zip(g, shift)) for g in P.generators),
        vertices=verts,
        dim=P.dim,
        affine_hull=tuple((a, c + dot(a, shift)) for a, c in P.affine_hull),
        facets=tuple((a, c + dot(a, shift)) for a, c in P.facets),
        denominator=lcm_denominators(x for v in verts for x in v),
    )


def negate(P: Polytope) -> Polytope:
    """The reflection -P (used for central-symmetry checks)."""
    return Polytope(
        ambient_dim=P.ambient_dim,
        generators=tuple(tuple(-x for x in g) for g in P.generators),
        vertices=tuple(sorted(tuple(-x for x in v) for v in P.vertices)),
        dim=P.dim,
        affine_hull=tuple((a, -c) for a, c in P.affine_hull),
        facets=tuple((tuple(-x for x in a), c) for a, c in P.facets),
        denominator=P.denominator,
    )


def relative_volume(P: Polytope, cells=None) -> Fraction:
    """Volume normalised to the lattice of the affine span.

    Only implemented for full-dimensional polytopes, from a triangulation.
    """
    from .exact import det
    from .triangulation import pulling_triangulation

    if P.dim != P.ambient_dim:
        raise ValueError("relative_volume needs a full-dimensional polytope")
    if cells is None:
        cells = pulling_triangulation(P).cells
    total = Fraction(0)
    for cell in cells:
        v = [P.vertices[i] for i in cell]
        total += abs(det([sub(w, v[0]) for w in v[1:]])) if P.dim else Fraction(1)
    return total / math.factorial(P.dim)
