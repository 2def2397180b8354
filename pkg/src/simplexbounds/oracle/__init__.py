"""Brute-force reference computations used to check the closed-form bounds."""

from .complex import (
    SimplicialComplex,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    f_vector,
    full_simplex,
    load_complex,
    minimal_nonfaces,
    octahedron,
    polygon,
    simplex_boundary,
)
from .homology import DEFAULT_VERTEX_LIMIT, hochster_betti, reduced_homology_ranks, vertex_limit
from .ideals import (
    DEFAULT_GENERATOR_LIMIT,
    MonomialIdeal,
    eliahou_kervaire_betti,
    is_stable,
    lex_ideal_in_degree,
    lex_monomials,
    lex_segment_ideal,
)

__all__ = [
    "SimplicialComplex",
    "cross_polytope_boundary",
    "cyclic_polytope_boundary",
    "f_vector",
    "full_simplex",
    "load_complex",
    "minimal_nonfaces",
    "octahedron",
    "polygon",
    "simplex_boundary",
    "DEFAULT_VERTEX_LIMIT",
    "hochster_betti",
    "reduced_homology_ranks",
    "vertex_limit",
    "DEFAULT_GENERATOR_LIMIT",
    "MonomialIdeal",
    "eliahou_kervaire_betti",
    "is_stable",
    "lex_ideal_in_degree",
    "lex_monomials",
    "lex_segment_ideal",
]
