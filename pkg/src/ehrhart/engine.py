"""Ehrhart polynomials, quasi-polynomials and the checks built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .exact import binomial, format_rational
from .lattice import boundary_count, count, ell
from .polytope import Polytope


class VerificationError(AssertionError):
    """An internal consistency check failed (a counting or geometry bug)."""


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # constant term first

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, t) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def serialize(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = format_rational(c)
            if mono and c == 1:
                coef = ""
            elif mono and c == -1:
                coef = "-"
            terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def interpolate(nodes: Sequence, values: Sequence) -> Polynomial:
    """Exact Lagrange interpolation through (nodes[i], values[i])."""
    if len(nodes) != len(values):
        raise ValueError("nodes and values differ in length")
    result = Polynomial(())
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        basis = Polynomial((Fraction(yi),))
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            denom = Fraction(xi - xj)
            basis = basis * Polynomial((-Fraction(xj) / denom, 1 / denom))
        result = result + basis
    return result


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    constituents: tuple
    minimal_period: int

    def __call__(self, t: int) -> Fraction:
        return self.constituents[t % self.period](t)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.constituents)


@dataclass(frozen=True)
class HStarNumerator:
    coeffs: tuple

    @property
    def degree(self) -> int:
        nz = [k for k, c in enumerate(self.coeffs) if c != 0]
        return nz[-1] if nz else -1


@dataclass(frozen=True)
class PickReport:
    A: Fraction
    B: int
    I: int
    pick_holds: bool
    polynomial_matches: bool


def ehrhart_polynomial(P: Polytope) -> Polynomial:
    """Interpolate the lattice counts of tP at t = 0..d and validate the
    interpolant on the holdout dilates t = d+1..2d+2."""
    if not P.is_integral:
        raise ValueError(f"ehrhart_polynomial needs an integral polytope (denominator {P.denominator})")
    d = P.dim
    nodes = list(range(d + 1))
    L = interpolate(nodes, [ell(P, t) for t in nodes])
    for t in range(d + 1, 2 * d + 3):
        got = count(P, t)
        if L(t) != got:
            raise VerificationError(f"interpolant predicts {L(t)} lattice points at t={t}, counted {got}")
    if L.degree != d:
        raise VerificationError(f"Ehrhart polynomial has degree {L.degree}, expected {d}")
    return L


def recurrence_check(f: Sequence[int], d: int) -> bool:
    """True iff sum_k (-1)^(d+1-k) C(d+1,k) f(t+k) == 0 for every window."""
    m = len(f) - 1
    if m < d + 1:
        raise ValueError(f"need at least {d + 2} values for d={d}, got {len(f)}")
    for t in range(m - d):
        s = sum((-1) ** (d + 1 - k) * binomial(d + 1, k) * f[t + k] for k in range(d + 2))
        if s != 0:
            return False
    return True


def hstar_numerator(L: Polynomial, d: int | None = None) -> HStarNumerator:
    """Numerator of sum_t L(t) z^t written over (1-z)^(d+1)."""
    if d is None:
        d = L.degree
    coeffs = []
    for k in range(d + 1):
        c = sum((-1) ** j * binomial(d + 1, j) * L(k - j) for j in range(k + 1))
        if c.denominator != 1:
            raise ValueError(f"h* coefficient {k} is not an integer: {c}")
        coeffs.append(int(c))
    # the coefficient of z^(d+1) must vanish for deg L <= d
    top = sum((-1) ** j * binomial(d + 1, j) * L(d + 1 - j) for j in range(d + 2))
    if top != 0:
        raise ValueError("polynomial degree exceeds d")
    return HStarNumerator(tuple(coeffs))


def reciprocity_table(P: Polytope, t_max: int, L: Polynomial | None = None) -> list[tuple[int, Fraction, int, bool]]:
    """Rows (t, L(-t), interior count of tP, match flag)."""
    if L is None:
        L = ehrhart_polynomial(P)
    sign = (-1) ** P.dim
    rows = []
    for t in range(1, t_max + 1):
        inside = count(P, t, "interior")
        rows.append((t, L(-t), inside, sign * L(-t) == inside))
    return rows


def reciprocity_check(P: Polytope, t_max: int) -> bool:
    return all(row[3] for row in reciprocity_table(P, t_max))


def _min_period(constituents) -> int:
    s = len(constituents)
    for m in range(1, s + 1):
        if s % m == 0 and all(constituents[i] == constituents[i % m] for i in range(s)):
            return m
    return s


def quasi_polynomial(P: Polytope) -> QuasiPolynomial:
    s = P.denominator
    d = P.dim
    constituents = []
    for j in range(s):
        nodes = [j + k * s for k in range(d + 1)]
        p = interpolate(nodes, [ell(P, t) for t in nodes])
        hold = j + (d + 1) * s
        got = count(P, hold)
        if p(hold) != got:
            raise VerificationError(f"constituent {j} predicts {p(hold)} at t={hold}, counted {got}")
        constituents.append(p)
    q = QuasiPolynomial(s, tuple(constituents), _min_period(constituents))
    sign = (-1) ** d
    for t in range(1, d + 2):
        inside = count(P, t, "interior")
        if sign * q(-t) != inside:
            raise VerificationError(f"quasi-reciprocity fails at t={t}: {sign * q(-t)} != {inside}")
    return q


def _cyclic_order(vertices):
    """Counter-clockwise order of the vertices of a convex polygon, exact."""
    cx = sum(v[0] for v in vertices) / len(vertices)
    cy = sum(v[1] for v in vertices) / len(vertices)

    def half(v):
        x, y = v[0] - cx, v[1] - cy
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        cross = (u[0] - cx) * (v[1] - cy) - (u[1] - cy) * (v[0] - cx)
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(vertices, key=cmp_to_key(cmp))


def shoelace_area(P: Polytope) -> Fraction:
    ring = _cyclic_order(P.vertices)
    twice = sum(ring[i][0] * ring[i - 1][1] - ring[i - 1][0] * ring[i][1]
                for i in range(len(ring)))
    return abs(twice) / 2


def pick_report(P: Polytope) -> PickReport:
    if P.ambient_dim != 2 or P.dim != 2:
        raise ValueError("pick_report needs a full-dimensional polygon in the plane")
    if not P.is_integral:
        raise ValueError("pick_report needs a lattice polygon")
    A = shoelace_area(P)
    closed = count(P, 1)
    I = count(P, 1, "interior")
    B = closed - I
    holds = A == I + Fraction(B, 2) - 1
    L = ehrhart_polynomial(P)
    expected = Polynomial((1, Fraction(B, 2), A))
    return PickReport(A, B, I, holds, L == expected)


def coefficient_report(P: Polytope, L: Polynomial | None = None) -> tuple[Fraction, Fraction, Fraction]:
    """(leading, second, constant) coefficients of the Ehrhart polynomial,
    after checking the constant term and the boundary-count identity."""
    if L is None:
        L = ehrhart_polynomial(P)
    d = P.dim
    c0 = L.coefficient(0)
    if c0 != 1:
        raise VerificationError(f"constant coefficient is {c0}, expected 1")
    predicted = L(1) - (-1) ** d * L(-1)
    direct = boundary_count(P, 1)
    if predicted != direct:
        raise VerificationError(f"boundary identity predicts {predicted}, counted {direct}")
    return L.coefficient(d), L.coefficient(d - 1) if d >= 1 else Fraction(0), c0
