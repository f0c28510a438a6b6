"""Property checks over the built-in corpus, used by ``verify-all``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import corpus
from .engine import (
    coefficient_report,
    ehrhart_polynomial,
    hstar_numerator,
    pick_report,
    quasi_polynomial,
    recurrence_check,
    reciprocity_check,
)
from .lattice import METHODS, count, ell, verify_covering
from .polytope import relative_volume
from .solid_angle import solid_angle_parity_check, solid_angle_sum
from .triangulation import mobius_identity_check, pulling_triangulation


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _guard(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a raised VerificationError is a failed check
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, bool(ok), detail)


def _polynomials(polys):
    return {name: ehrhart_polynomial(P) for name, P in polys.items()}


def run_all(seed: int = 0, polygons: int = 5):
    integral = corpus.integral_corpus()
    integral.update(corpus.random_polygons(seed, polygons))
    L = _polynomials(integral)
    results = []

    def add(name, fn):
        results.append(_guard(name, fn))

    for h in (1, 2, 13):
        add(f"reeve_{h}_polynomial", lambda h=h: (
            L[f"reeve_{h}"].coeffs == (1, 2 - Fraction(h, 6), 1, Fraction(h, 6)), str(L[f"reeve_{h}"])))

    def covering():
        P = corpus.pick_triangle()
        reports = [verify_covering(P, t) for t in range(-3, 5)]
        bad = [r.t for r in reports if not r.ok]
        return not bad, f"failing t: {bad}" if bad else "t in [-3, 4]"
    add("pick_triangle_covering", covering)

    for name, P in integral.items():
        add(f"{name}_reciprocity", lambda P=P: (reciprocity_check(P, 5), ""))
        d = P.dim

        def signed(P=P, d=d):
            seq = [ell(P, t) for t in range(-(d + 3), d + 4)]
            return recurrence_check(seq, d), ""
        add(f"{name}_signed_recurrence", signed)

        def hstar(P=P, d=d, poly=L[name]):
            h = hstar_numerator(poly, d)
            ok = h.coeffs[0] == 1 and h.degree <= d and sum(h.coeffs) == math.factorial(d) * poly.coefficient(d)
            return ok, str(list(h.coeffs))
        add(f"{name}_hstar", hstar)
        add(f"{name}_coefficients", lambda P=P, poly=L[name]: (coefficient_report(P, poly)[2] == 1, ""))

        if d == P.ambient_dim and len(P.vertices) <= 8:
            def volume(P=P, poly=L[name], d=d):
                vol = relative_volume(P)
                return vol == poly.coefficient(d), f"{vol}"
            add(f"{name}_triangulation_volume", volume)

    for name, P in integral.items():
        if len(P.vertices) > 8:
            continue
        def oracles(P=P):
            for t in range(1, 4):
                counts = {m: count(P, t, "closed", m) for m in METHODS if m != "simplex_barycentric" or P.is_simplex}
                if len(set(counts.values())) != 1:
                    return False, f"t={t}: {counts}"
            return True, ""
        add(f"{name}_oracle_agreement", oracles)

    for name in ("cube_2", "octahedron"):
        P = integral[name]
        add(f"{name}_mobius", lambda P=P: (mobius_identity_check(pulling_triangulation(P), range(1, 4), count), ""))

    for name, P in corpus.rational_corpus().items():
        def quasi(P=P):
            q = quasi_polynomial(P)
            return P.denominator % q.minimal_period == 0, f"period {q.period}, minimal {q.minimal_period}"
        add(f"{name}_quasi", quasi)

    rng = random.Random(seed)
    for i in range(5):
        S = corpus.random_rational_simplex(rng, rng.randint(1, 3))
        add(f"random_simplex_{i}_quasi", lambda S=S: (S.denominator % quasi_polynomial(S).minimal_period == 0, ""))

    polygons_2d = {k: v for k, v in integral.items() if v.ambient_dim == 2 and v.dim == 2}
    for name, P in polygons_2d.items():
        add(f"{name}_pick", lambda P=P: ((lambda r: (r.pick_holds and r.polynomial_matches, f"A={r.A} B={r.B} I={r.I}"))(pick_report(P))))

        def solid(P=P):
            worst = max(solid_angle_sum(P, t).abs_error for t in range(1, 11))
            return worst < 1e-6, f"max error {worst:.2e}"
        add(f"{name}_solid_angle_sum", solid)
        add(f"{name}_solid_angle_parity", lambda P=P: (solid_angle_parity_check(P, 5), ""))

    return results
