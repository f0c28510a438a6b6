"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .engine import (
    VerificationError,
    ehrhart_polynomial,
    hstar_numerator,
    pick_report,
    quasi_polynomial,
    reciprocity_table,
)
from .exact import format_rational
from .fileio import PolytopeFileError, parse_polytope_file
from .lattice import METHODS, count_report, verify_covering
from .solid_angle import solid_angle_sum
from .triangulation import pulling_triangulation

SUBCOMMANDS = ("count", "triangulate", "ehrhart", "quasi", "reciprocity",
               "pick", "solid-angle", "covering", "verify-all")
SEED_ENV = "EHRHART_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input_path: str | None = None
    t_min: int = 1
    t_max: int = 5
    output_format: str = "human"
    seed: int = 0
    method: str = "bounding_box"

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.t_min > self.t_max:
            raise UsageError(f"--t-min {self.t_min} exceeds --t-max {self.t_max}")
        if self.output_format not in ("human", "structured"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.subcommand != "verify-all":
            if not self.input_path:
                raise UsageError(f"{self.subcommand} needs an input polytope file")
            if not os.path.isfile(self.input_path):
                raise UsageError(f"no such file: {self.input_path}")


class _Emitter:
    """Human mode prints key=value lines; structured mode collects records
    and prints one JSON document at the end."""

    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out
        self.records = []

    def emit(self, **fields):
        if self.fmt == "structured":
            self.records.append(fields)
        else:
            parts = []
            for k, v in fields.items():
                if isinstance(v, list):
                    v = "[" + ",".join(str(x) for x in v) + "]"
                parts.append(f"{k}={v}")
            print(" ".join(parts), file=self.out)

    def close(self, **summary):
        if self.fmt == "structured":
            doc = dict(summary)
            doc["records"] = self.records
            print(json.dumps(doc, indent=2), file=self.out)
        elif summary:
            self.emit(**summary)


def _run_count(P, cfg, em):
    for t in range(max(cfg.t_min, 1), cfg.t_max + 1):
        em.emit(**count_report(P, t, cfg.method).as_dict())
    return True


def _run_triangulate(P, cfg, em):
    T = pulling_triangulation(P)
    if cfg.output_format == "human":
        print(T.dump(), file=em.out)
    else:
        for cell in T.cells:
            em.emit(cell=list(cell))
    return True


def _run_ehrhart(P, cfg, em):
    L = ehrhart_polynomial(P)
    h = hstar_numerator(L, P.dim)
    em.emit(coefficients=L.serialize(), degree=L.degree, hstar=list(h.coeffs))
    return True


def _run_quasi(P, cfg, em):
    q = quasi_polynomial(P)
    em.emit(period=q.period, minimal_period=q.minimal_period)
    for j, p in enumerate(q.constituents):
        em.emit(residue=j, coefficients=p.serialize())
    return True


def _run_reciprocity(P, cfg, em):
    ok = True
    for t, value, inside, match in reciprocity_table(P, cfg.t_max):
        if t < cfg.t_min:
            continue
        em.emit(t=t, L_neg_t=format_rational(value), interior=inside, match=match)
        ok = ok and match
    return ok


def _run_pick(P, cfg, em):
    r = pick_report(P)
    em.emit(A=format_rational(r.A), B=r.B, I=r.I, pick_holds=r.pick_holds,
            polynomial_matches=r.polynomial_matches)
    return r.pick_holds and r.polynomial_matches


def _run_solid_angle(P, cfg, em):
    if P.ambient_dim != 2 or P.dim != 2:
        raise UsageError("solid-angle needs a full-dimensional polygon in the plane")
    ok = True
    for t in range(max(cfg.t_min, 1), cfg.t_max + 1):
        r = solid_angle_sum(P, t)
        em.emit(t=t, sum=repr(r.weighted_sum), expected=repr(r.expected), error=f"{r.abs_error:.3e}")
        ok = ok and r.abs_error < 1e-6
    return ok


def _run_covering(P, cfg, em):
    ok = True
    lo = max(cfg.t_min, -P.dim - 1)
    for t in range(lo, cfg.t_max + 1):
        r = verify_covering(P, t)
        em.emit(t=t, q_union_count=r.q_union_count, deficiency=len(r.deficiency_points),
                recurrence_lhs=r.recurrence_lhs, recurrence_rhs=r.recurrence_rhs, ok=r.ok)
        ok = ok and r.ok
    return ok


def _run_verify_all(cfg, em):
    from .checks import run_all

    failures = []
    for res in run_all(cfg.seed):
        em.emit(check=res.name, status="PASS" if res.ok else "FAIL", detail=res.detail)
        if not res.ok:
            failures.append(res.name)
    return failures


_HANDLERS = {
    "count": _run_count,
    "triangulate": _run_triangulate,
    "ehrhart": _run_ehrhart,
    "quasi": _run_quasi,
    "reciprocity": _run_reciprocity,
    "pick": _run_pick,
    "solid-angle": _run_solid_angle,
    "covering": _run_covering,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg.validate()
        em = _Emitter(cfg.output_format, out)
        if cfg.subcommand == "verify-all":
            failures = _run_verify_all(cfg, em)
            em.close(status="PASS" if not failures else "FAIL", seed=cfg.seed)
            if failures:
                print(f"first failing check: {failures[0]}", file=err)
                return EXIT_FAIL
            return EXIT_OK
        P = parse_polytope_file(cfg.input_path)
        ok = _HANDLERS[cfg.subcommand](P, cfg, em)
        em.close()
    except (UsageError, PolytopeFileError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=err)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if not ok:
        print(f"verification failed: {cfg.subcommand}", file=err)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ehrhart", description="Ehrhart polynomials of rational polytopes")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("input", nargs="?", help="polytope file (not used by verify-all)")
    parser.add_argument("--t-min", type=int, default=1)
    parser.add_argument("--t-max", type=int, default=5)
    parser.add_argument("--format", dest="output_format", choices=("human", "structured"), default="human")
    parser.add_argument("--method", choices=METHODS, default="bounding_box")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"corpus seed for verify-all (default ${SEED_ENV} or 0)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = args.seed
    if seed is None:
        try:
            seed = int(os.environ.get(SEED_ENV, "0"))
        except ValueError:
            print(f"error: {SEED_ENV} must be an integer", file=sys.stderr)
            return EXIT_USAGE
    cfg = RunConfig(args.subcommand, args.input, args.t_min, args.t_max,
                    args.output_format, seed, args.method)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
