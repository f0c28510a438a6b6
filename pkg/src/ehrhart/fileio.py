"""Polytope file format: ``{"ambient_dim": n, "vertices": [["p/q", ...], ...]}``."""

from __future__ import annotations

import json
from pathlib import Path

from .exact import RationalParseError, format_rational, parse_rational
from .polytope import Polytope, build_polytope


class PolytopeFileError(ValueError):
    pass


def polytope_from_document(doc) -> Polytope:
    if not isinstance(doc, dict):
        raise PolytopeFileError("polytope document must be an object")
    if "vertices" not in doc:
        raise PolytopeFileError("missing field 'vertices'")
    rows = doc["vertices"]
    if not isinstance(rows, list) or not rows:
        raise PolytopeFileError("empty vertex list")
    n = doc.get("ambient_dim")
    if n is None:
        n = len(rows[0]) if isinstance(rows[0], list) else None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise PolytopeFileError(f"bad ambient_dim {doc.get('ambient_dim')!r}")
    points = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise PolytopeFileError(f"vertex {i} is not a list: {row!r}")
        if len(row) != n:
            raise PolytopeFileError(f"ragged row: vertex {i} has {len(row)} coordinates, ambient_dim is {n}")
        try:
            points.append([parse_rational(tok) for tok in row])
        except RationalParseError as exc:
            raise PolytopeFileError(f"vertex {i}: malformed rational {exc.token!r}") from None
    return build_polytope(points)


def parse_polytope_file(path) -> Polytope:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeFileError(f"{path}: not a valid document ({exc.msg} at line {exc.lineno})") from None
    return polytope_from_document(doc)


def polytope_document(P: Polytope) -> dict:
    return {"ambient_dim": P.ambient_dim,
            "vertices": [[format_rational(x) for x in v] for v in P.vertices]}


def dumps_polytope(P: Polytope) -> str:
    return json.dumps(polytope_document(P))
