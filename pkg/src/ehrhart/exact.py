"""Exact rational scalars, vectors and linear algebra.

Everything here works over :class:`fractions.Fraction`, which is always kept
in lowest terms with a positive denominator.  Vectors are plain tuples and
matrices are tuples of row tuples.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]
QMatrix = tuple  # tuple[QVector, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalParseError(ValueError):
    """Raised for a string that is not of the form ``p`` or ``p/q``."""

    def __init__(self, token):
        super().__init__(f"malformed rational {token!r}")
        self.token = token


def parse_rational(token) -> Fraction:
    if isinstance(token, bool):
        raise RationalParseError(token)
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, Fraction):
        return token
    if not isinstance(token, str):
        raise RationalParseError(token)
    m = _RATIONAL_RE.match(token)
    if m is None:
        raise RationalParseError(token)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(token)
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def qvec(values: Iterable) -> QVector:
    return tuple(Fraction(v) if not isinstance(v, str) else parse_rational(v)
                 for v in values)


def dot(u: Sequence, v: Sequence):
    # stays an int when both vectors are integral
    return sum(map(operator.mul, u, v))


def sub(u: Sequence, v: Sequence) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u: Sequence) -> QVector:
    return tuple(c * a for a in u)


def is_integral(u: Sequence) -> bool:
    return all(Fraction(a).denominator == 1 for a in u)


def lcm_denominators(values: Iterable) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out


def primitive_integer(u: Sequence) -> tuple:
    """Scale a nonzero rational vector to the primitive integer vector
    pointing the same way."""
    m = lcm_denominators(u)
    ints = [int(Fraction(a) * m) for a in u]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Pivots are the first nonzero entry in
    column order; returns the reduced rows and the pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[QVector]:
    """Basis of {x : rows · x = 0}, one vector per free column."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -red[i][f]
        basis.append(tuple(x))
    return basis


def solve_linear(A: Sequence[Sequence], b: Sequence) -> tuple[Optional[QVector], int]:
    """Solve ``A x = b`` exactly.

    Returns ``(x, rank(A))`` where ``x`` is one solution (free variables set
    to zero) or ``None`` when the system is inconsistent.
    """
    if len(A) != len(b):
        raise ValueError(f"A has {len(A)} rows but b has {len(b)} entries")
    if not A:
        return (), 0
    ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise ValueError("ragged matrix")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None, len(pivots) - 1
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return tuple(x), len(pivots)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def feasible_nonnegative(A: Sequence[Sequence], b: Sequence) -> Optional[QVector]:
    """Find ``y >= 0`` with ``A y = b`` or return ``None``.

    Phase one of the simplex method over the rationals, Bland's rule.
    """
    m = len(A)
    if m != len(b):
        raise ValueError("dimension mismatch")
    if m == 0:
        return ()
    n = len(A[0])
    # tableau rows: [A | I | b] with b >= 0
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(int(i == j)) for j in range(m)]
        tab.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m
    # objective: minimise the sum of artificials, stored as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded; cannot happen for phase one
            break
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * c for a, c in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [a - f * c for a, c in zip(cost, tab[leave])]
        basis[leave] = enter

    if cost[width] != 0:
        return None
    y = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            y[var] = tab[i][width]
    return tuple(y)


def convex_combination(points: Sequence[Sequence], x: Sequence) -> Optional[QVector]:
    """Coefficients ``a >= 0``, ``sum(a) == 1`` with ``sum a_i p_i == x``,
    or ``None`` if ``x`` is not in the convex hull of ``points``."""
    if not points:
        return None
    dim = len(x)
    A = [[p[k] for p in points] for k in range(dim)]
    A.append([1] * len(points))
    return feasible_nonnegative(A, list(x) + [1])


def det(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * out
