"""Finite simplicial complexes given by facets, and the polytope families we test on."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable

from ..errors import ValidationError
from ..vectors import FVector

__all__ = [
    "SimplicialComplex",
    "cyclic_polytope_boundary",
    "polygon",
    "cross_polytope_boundary",
    "octahedron",
    "simplex_boundary",
    "full_simplex",
    "f_vector",
    "minimal_nonfaces",
    "load_complex",
]


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices ``0..n_vertices-1`` and a list of facets (sorted vertex tuples).

    Faces are every subset of a facet.  Facets must be inclusion-maximal; use
    :meth:`from_faces` to reduce an arbitrary generating list.
    """

    n_vertices: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        facets = tuple(sorted({tuple(sorted(set(f))) for f in self.facets}))
        object.__setattr__(self, "facets", facets)
        if self.n_vertices < 1:
            raise ValidationError("a complex needs at least one vertex")
        masks = [_mask(f) for f in facets]
        for f in facets:
            for v in f:
                if not 0 <= v < self.n_vertices:
                    raise ValidationError(f"vertex {v} outside 0..{self.n_vertices - 1}")
        for a, b in combinations(masks, 2):
            if a & b in (a, b):
                raise ValidationError("facet list contains a face of another facet")

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = sorted({_mask(f) for f in faces}, key=lambda m: -bin(m).count("1"))
        maximal: list[int] = []
        for m in masks:
            if not any(m & big == m for big in maximal):
                maximal.append(m)
        return cls(n_vertices, tuple(_vertices(m) for m in maximal))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces_by_size(self) -> list[list[int]]:
        """Bitmasks of all faces grouped by cardinality, including the empty face."""
        seen: set[int] = set()
        for f in self.facets:
            for size in range(len(f) + 1):
                for sub in combinations(f, size):
                    seen.add(_mask(sub))
        top = self.dimension + 1
        out: list[list[int]] = [[] for _ in range(top + 1)]
        for m in seen:
            out[bin(m).count("1")].append(m)
        for layer in out:
            layer.sort()
        return out

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(m for layer in self.faces_by_size for m in layer)

    def is_face(self, vertices: Iterable[int]) -> bool:
        return _mask(vertices) in self.face_set

    def to_json(self) -> dict:
        return {"n": self.n_vertices, "facets": [[v + 1 for v in f] for f in self.facets]}

    @classmethod
    def from_json(cls, doc: dict) -> "SimplicialComplex":
        try:
            n = int(doc["n"])
            facets = [[int(v) - 1 for v in f] for f in doc["facets"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed complex document: {exc}") from exc
        return cls.from_faces(n, facets)


def load_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return SimplicialComplex.from_json(json.load(fh))


def cyclic_polytope_boundary(n: int, d: int) -> SimplicialComplex:
    """Boundary complex of the cyclic polytope ``C(n, d)`` via Gale's evenness condition."""
    if not n >= d + 1 >= 3:
        raise ValidationError(f"cyclic polytope needs n >= d + 1 >= 3, got n = {n}, d = {d}")
    facets = []
    for s in combinations(range(n), d):
        members = set(s)
        outside = [v for v in range(n) if v not in members]
        if all(
            sum(1 for v in s if a < v < b) % 2 == 0
            for a, b in zip(outside, outside[1:])
        ):
            facets.append(s)
    return SimplicialComplex(n, tuple(facets))


def polygon(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValidationError("a polygon needs at least 3 vertices")
    return SimplicialComplex(n, tuple((i, (i + 1) % n) for i in range(n)))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Vertices ``2i`` and ``2i + 1`` are antipodal."""
    if d < 1:
        raise ValidationError("cross-polytope dimension must be positive")
    facets = tuple(tuple(2 * i + b for i, b in enumerate(bits)) for bits in product((0, 1), repeat=d))
    return SimplicialComplex(2 * d, facets)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def simplex_boundary(d: int) -> SimplicialComplex:
    return SimplicialComplex(d + 1, tuple(combinations(range(d + 1), d)))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (tuple(range(n)),))


def f_vector(c: SimplicialComplex) -> FVector:
    return FVector(tuple(len(layer) for layer in c.faces_by_size))


def minimal_nonfaces(c: SimplicialComplex) -> list[tuple[int, ...]]:
    """Inclusion-minimal non-faces, ordered by size then lexicographically."""
    faces = c.face_set
    found: set[int] = set()
    for layer in c.faces_by_size:
        for face in layer:
            for v in range(c.n_vertices):
                bit = 1 << v
                if face & bit:
                    continue
                cand = face | bit
                if cand in faces or cand in found:
                    continue
                rest = cand
                minimal = True
                while rest:
                    b = rest & -rest
                    rest ^= b
                    if cand ^ b not in faces:
                        minimal = False
                        break
                if minimal:
                    found.add(cand)
    return sorted((_vertices(m) for m in found), key=lambda s: (len(s), s))
