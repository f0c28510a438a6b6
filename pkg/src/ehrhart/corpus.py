"""Built-in test polytopes and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .exact import rank, sub
from .polytope import Polytope, build_polytope


def pick_triangle() -> Polytope:
    return build_polytope([(0, 0), (2, 0), (2, 1)])


def unit_square() -> Polytope:
    return unit_cube(2)


def unit_cube(d: int) -> Polytope:
    return build_polytope(list(product((0, 1), repeat=d)))


def standard_simplex(d: int) -> Polytope:
    pts = [tuple([0] * d)]
    for i in range(d):
        pts.append(tuple(int(i == j) for j in range(d)))
    return build_polytope(pts)


def reeve(h: int) -> Polytope:
    return build_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, h)])


def octahedron() -> Polytope:
    pts = []
    for i in range(3):
        for s in (1, -1):
            pts.append(tuple(s * int(i == j) for j in range(3)))
    return build_polytope(pts)


def half_segment() -> Polytope:
    return build_polytope([(0,), (Fraction(1, 2),)])


def half_square() -> Polytope:
    h = Fraction(1, 2)
    return build_polytope([(-h, -h), (h, -h), (-h, h), (h, h)])


def diagonal_segment() -> Polytope:
    return build_polytope([(0, 0), (2, 2)])


def random_lattice_polygon(rng: random.Random, size: int = 6, npoints: int = 8) -> Polytope:
    """Convex hull of random lattice points in [0, size]^2, full-dimensional."""
    while True:
        pts = [(rng.randint(0, size), rng.randint(0, size)) for _ in range(npoints)]
        P = build_polytope(pts)
        if P.dim == 2:
            return P


def random_rational_simplex(rng: random.Random, dim: int, max_den: int = 4, span: int = 1) -> Polytope:
    """Full-dimensional simplex with coordinates p/q, |p/q| <= span, for one
    q <= max_den, so the denominator of the simplex divides q."""
    while True:
        q = rng.randint(1, max_den)
        pts = []
        for _ in range(dim + 1):
            pts.append(tuple(Fraction(rng.randint(-span * q, span * q), q) for _ in range(dim)))
        if rank([sub(p, pts[0]) for p in pts[1:]]) == dim:
            return build_polytope(pts)


def integral_corpus() -> dict[str, Polytope]:
    corpus = {"pick_triangle": pick_triangle(),
              "triangle_3": build_polytope([(0, 0), (3, 0), (0, 3)]),
              "diagonal_segment": diagonal_segment(),
              "octahedron": octahedron()}
    for d in range(1, 5):
        corpus[f"cube_{d}"] = unit_cube(d)
        corpus[f"simplex_{d}"] = standard_simplex(d)
    for h in (1, 2, 13):
        corpus[f"reeve_{h}"] = reeve(h)
    return corpus


def rational_corpus() -> dict[str, Polytope]:
    return {"half_segment": half_segment(), "half_square": half_square()}


def random_polygons(seed: int, k: int) -> dict[str, Polytope]:
    rng = random.Random(seed)
    return {f"polygon_{seed}_{i}": random_lattice_polygon(rng) for i in range(k)}
