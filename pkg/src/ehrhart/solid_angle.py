"""Solid-angle weighted lattice sums for lattice polygons.

Points are classified exactly (outside, interior, edge, vertex); floats only
enter through the final vertex angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .engine import shoelace_area
from .exact import dot, qvec
from .polytope import Polytope, build_polytope, dilate


@dataclass(frozen=True)
class SolidAngleReport:
    t: int
    weighted_sum: float
    expected: float

    @property
    def abs_error(self) -> float:
        return abs(self.weighted_sum - self.expected)


def _require_polygon(P):
    if P.ambient_dim != 2 or P.dim != 2:
        raise ValueError("solid angles are only implemented for full-dimensional polygons in the plane")


def solid_angle(P: Polytope, x) -> float:
    """Fraction of a small disc around x that lies in P."""
    _require_polygon(P)
    x = tuple(c if isinstance(c, int) else qvec([c])[0] for c in x)
    slack = [c - dot(a, x) for a, c in P.facets]
    if any(s < 0 for s in slack):
        return 0.0
    tight = [i for i, s in enumerate(slack) if s == 0]
    if not tight:
        return 1.0
    if len(tight) == 1:
        return 0.5
    # a vertex: the two tight edges run to its neighbours
    neighbours = []
    for i in tight[:2]:
        a, c = P.facets[i]
        on_edge = [v for v in P.vertices if dot(a, v) == c and v != x]
        neighbours.append(on_edge[0])
    u = [float(neighbours[0][k] - x[k]) for k in range(2)]
    w = [float(neighbours[1][k] - x[k]) for k in range(2)]
    angle = math.atan2(abs(u[0] * w[1] - u[1] * w[0]), u[0] * w[0] + u[1] * w[1])
    return angle / (2 * math.pi)


def vertex_angles(P: Polytope) -> list[float]:
    """Interior angles (radians) at each vertex."""
    return [2 * math.pi * solid_angle(P, v) for v in P.vertices]


def _box_points(P):
    return product(*(range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in P.bounding_box()))


def _weighted_sum(Q: Polytope) -> float:
    return math.fsum(solid_angle(Q, x) for x in _box_points(Q))


def solid_angle_sum(P: Polytope, t: int) -> SolidAngleReport:
    _require_polygon(P)
    if t < 1:
        raise ValueError("t must be a positive integer")
    area = shoelace_area(P)
    return SolidAngleReport(t, _weighted_sum(dilate(P, t)), float(area * t * t))


def signed_enumerator(P: Polytope, t: int) -> float:
    """a_P(t) extended to all integers: a_P(0) = 0 and, in the plane,
    a_P(-t) is the weighted sum over -tP."""
    if t > 0:
        return _weighted_sum(dilate(P, t))
    if t == 0:
        return 0.0
    reflected = build_polytope([[t * c for c in v] for v in P.vertices])
    return _weighted_sum(reflected)


def fit_solid_angle_polynomial(P: Polytope) -> np.ndarray:
    """Coefficients (constant first) of the quadratic through a_P(1..3)."""
    ts = np.array([1.0, 2.0, 3.0])
    vals = np.array([signed_enumerator(P, t) for t in (1, 2, 3)])
    return np.polynomial.polynomial.polyfit(ts, vals, 2)


def solid_angle_parity_check(P: Polytope, t_max: int, tol: float = 1e-6) -> bool:
    _require_polygon(P)
    coeffs = fit_solid_angle_polynomial(P)
    if abs(coeffs[1]) > tol:
        return False
    for t in range(-t_max, t_max + 1):
        predicted = np.polynomial.polynomial.polyval(t, coeffs)
        if t == 0:
            # the extension sets a_P(0) = 0; checked against the fit
            if abs(predicted) > tol:
                return False
            continue
        if abs(predicted - signed_enumerator(P, t)) > tol:
            return False
    return True
