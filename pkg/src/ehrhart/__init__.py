"""Exact Ehrhart polynomials and quasi-polynomials of rational polytopes."""

from .engine import (
    HStarNumerator,
    PickReport,
    Polynomial,
    QuasiPolynomial,
    VerificationError,
    coefficient_report,
    ehrhart_polynomial,
    hstar_numerator,
    pick_report,
    quasi_polynomial,
    recurrence_check,
    reciprocity_check,
)
from .exact import binomial, format_rational, parse_rational, solve_linear
from .fileio import parse_polytope_file
from .lattice import CountReport, CoveringReport, boundary_count, count, ell, verify_covering
from .polytope import HalfspaceDescription, Polytope, build_polytope, contains, dilate
from .solid_angle import SolidAngleReport, solid_angle, solid_angle_parity_check, solid_angle_sum
from .triangulation import Simplex, Triangulation, interior_faces, mobius_identity_check, pulling_triangulation

__version__ = "0.1.0"
