"""Pulling triangulations using only the vertices of the polytope."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .exact import dot, rank, sub
from .polytope import Polytope, build_polytope


@dataclass(frozen=True)
class Simplex:
    vertex_ids: tuple
    dim: int


@dataclass(frozen=True)
class Triangulation:
    polytope: Polytope
    cells: tuple          # top-dimensional simplices, as sorted vertex-id tuples
    faces: tuple          # every nonempty face of every cell, deduplicated
    boundary_flags: dict  # face -> True when the face lies in the boundary

    @property
    def simplices(self) -> list[Simplex]:
        return [Simplex(c, len(c) - 1) for c in self.cells]

    def face_points(self, face: Sequence[int]) -> list:
        return [self.polytope.vertices[i] for i in face]

    def face_polytope(self, face: Sequence[int]) -> Polytope:
        return build_polytope(self.face_points(face))

    def dump(self) -> str:
        return "\n".join(" ".join(str(i) for i in c) for c in self.cells)


def _pull(P: Polytope, ids: tuple) -> list[tuple]:
    """Triangulate conv(vertices[ids]); ``ids`` is the vertex set of a face
    of P (or P itself) listed in lexicographic vertex order."""
    pts = [P.vertices[i] for i in ids]
    if len(pts) == 1:
        return [ids]
    dim = rank([sub(p, pts[0]) for p in pts[1:]])
    if len(ids) == dim + 1:
        return [ids]
    face = build_polytope(pts)
    # build_polytope sorts vertices lexicographically, as ``ids`` already are
    apex = ids[0]
    cells = []
    for a, c in face.facets:
        tight = tuple(i for i in ids if dot(a, P.vertices[i]) == c)
        if apex in tight:
            continue
        for sub_cell in _pull(P, tight):
            cells.append(tuple(sorted((apex,) + sub_cell)))
    return cells


def pulling_triangulation(P: Polytope) -> Triangulation:
    """Pull the lexicographically smallest vertex and cone it over a
    recursive triangulation of every facet that misses it."""
    ids = tuple(range(len(P.vertices)))  # vertices are stored sorted
    cells = tuple(sorted(_pull(P, ids)))
    faces = set()
    for cell in cells:
        for k in range(1, len(cell) + 1):
            faces.update(combinations(cell, k))
    faces = tuple(sorted(faces, key=lambda f: (len(f), f)))
    flags = {f: is_boundary_face(P, f) for f in faces}
    return Triangulation(P, cells, faces, flags)


def is_boundary_face(P: Polytope, face: Iterable[int]) -> bool:
    face = list(face)
    return any(all(dot(a, P.vertices[i]) == c for i in face) for a, c in P.facets)


def interior_faces(T: Triangulation) -> list[tuple]:
    return [f for f in T.faces if not T.boundary_flags[f]]


Counter = Callable[[Polytope, int, str], int]


def mobius_identity_check(T: Triangulation, t_values: Iterable[int], counter: Counter) -> bool:
    """Check, for every t, both the inversion identity

        #(tP) = (-1)^d * sum over interior faces F of (-1)^dim F * #(tF)

    and the partition of tP into relatively open faces

        #(tP) = sum over all faces F of #(tF relative interior).

    ``counter(polytope, t, mode)`` supplies lattice counts.
    """
    P = T.polytope
    d = P.dim
    face_polys = {f: T.face_polytope(f) for f in T.faces}
    for t in t_values:
        total = counter(P, t, "closed")
        signed = sum((-1) ** (len(f) - 1) * counter(face_polys[f], t, "closed")
                     for f in interior_faces(T))
        if total != (-1) ** d * signed:
            return False
        partition = sum(counter(face_polys[f], t, "interior") for f in T.faces)
        if total != partition:
            return False
    return True
