"""Bounds on the number of empty simplices (minimal non-faces) of simplicial polytopes.

An empty ``k``-simplex has ``k + 1`` vertices and is a minimal generator of
degree ``k + 1`` of the Stanley-Reisner ideal.  Functions taking ``j`` as a
*generator degree* say so; the ``empty_dimension_*`` helpers take simplex
dimensions instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .binomial import binom, macaulay_lower, macaulay_shift, macaulay_upper
from .errors import PreconditionError
from .vectors import GVector

__all__ = [
    "EmptySimplexBoundReport",
    "generator_degree_bound",
    "empty_dimension_bound",
    "vanishing_range",
    "cumulative_bound",
    "total_bound",
    "vertex_count_bound",
    "dimension_free_bound",
    "kalai_bound",
    "gk_bound",
    "gk_dimension_free_bound",
    "bound_report",
]


def _as_g(g) -> GVector:
    return g if isinstance(g, GVector) else GVector(tuple(g))


def _check_dimension(g: GVector, d: int) -> None:
    if 2 * g.u > d:
        raise PreconditionError(f"2u = {2 * g.u} exceeds d = {d}; no such polytope")


def _up(g: GVector, j: int) -> int:
    return macaulay_upper(g.get(j), j)


def _down(g: GVector, j: int) -> int:
    return macaulay_lower(g.get(j), j)


def generator_degree_bound(g, d: int, j: int) -> int:
    """Upper bound on the number of minimal non-faces with ``j`` vertices.

    A simplex (``u = 0``) has exactly one minimal non-face, all ``d + 1``
    vertices.
    """
    g = _as_g(g)
    _check_dimension(g, d)
    u = g.u
    if u == 0:
        return 1 if j == d + 1 else 0
    if d == 2 * u and j == u + 1:
        return _up(g, u) + g.get(u)
    lower_top = u + 1 if d > 2 * u else u
    if 2 <= j <= lower_top:
        return _up(g, j - 1) - g.get(j)
    if max(d - u + 1, u + 2) <= j <= d:
        return g.get(d + 1 - j) - _down(g, d + 2 - j)
    return 0


def empty_dimension_bound(g, d: int, dim: int) -> int:
    """Upper bound on the number of empty simplices of dimension ``dim``."""
    return generator_degree_bound(g, d, dim + 1)


def vanishing_range(g, d: int) -> tuple[int, int] | None:
    """Closed range of simplex dimensions with no empty simplices, or None."""
    g = _as_g(g)
    _check_dimension(g, d)
    lo, hi = g.u + 1, d - g.u - 1
    return (lo, hi) if lo <= hi else None


def cumulative_bound(g, d: int, k: int) -> int:
    """``N(k)``: bound on the number of empty simplices of dimension at most ``k``."""
    g = _as_g(g)
    _check_dimension(g, d)
    u = g.u
    if u < 1:
        raise PreconditionError("cumulative bound needs u >= 1 (P is not a simplex)")
    if not 1 <= k < d:
        raise PreconditionError(f"k = {k} must satisfy 1 <= k < d = {d}")
    if k <= min(u, d - u - 1):
        return g.g1 + sum(_up(g, j) - g.get(j) for j in range(1, k + 1)) - g.get(k + 1)
    if u < k < d - u:
        return cumulative_bound(g, d, u)
    return (
        g.g1
        + _up(g, d - k)
        + sum(_up(g, j) - g.get(j) for j in range(1, d - k))
        + sum(_up(g, j) - _down(g, j) for j in range(d - k + 1, u + 1))
    )


def total_bound(g) -> int:
    """Bound on the total number of empty simplices; independent of ``d``."""
    g = _as_g(g)
    if g.u < 1:
        raise PreconditionError("total bound needs u >= 1 (P is not a simplex)")
    return binom(g.g1 + 2, 2) - 1 + sum(_up(g, j) - _down(g, j) for j in range(2, g.u + 1))


def vertex_count_bound(g1: int, d: int, k: int) -> int:
    """``N(k)`` bound for a non-simplex ``d``-polytope with ``d + g1 + 1`` vertices."""
    if g1 < 1:
        raise PreconditionError("g_1 must be positive (P is not a simplex)")
    if not 1 <= k < d:
        raise PreconditionError(f"k = {k} must satisfy 1 <= k < d = {d}")
    if 2 * k < d:
        return binom(g1 + k, g1 - 1)
    half = d // 2
    return binom(g1 + half, g1 - 1) + binom(g1 + half - 1, g1 - 1)


def dimension_free_bound(g1: int, k: int) -> int:
    """Bound on empty simplices of dimension ``<= k`` valid in every dimension."""
    if g1 < 1:
        raise PreconditionError("g_1 must be positive (P is not a simplex)")
    return binom(g1 + k, g1 - 1) + binom(g1 + k - 1, g1 - 1)


def kalai_bound(g1: int, k: int) -> int:
    """The older estimate ``(g1 + 1)^(k+1) (k+1)!``, kept for comparison."""
    return (g1 + 1) ** (k + 1) * math.factorial(k + 1)


def gk_bound(b: int, k: int, j: int, d: int) -> int:
    """Bound on empty ``j``-simplices of a ``d``-polytope knowing only ``g_k <= b``."""
    if not j >= k >= 1:
        raise PreconditionError(f"need j >= k >= 1, got j = {j}, k = {k}")
    if b < 0:
        raise PreconditionError(f"b = {b} must be non-negative")
    if d < j + k:
        raise PreconditionError(
            f"requires d >= j + k (got d = {d}, j + k = {j + k}); "
            "g_k alone does not bound g_{d-j} otherwise"
        )
    if 2 * j < d:
        return macaulay_shift(b, k, j - k + 1)
    if 2 * j == d:
        return macaulay_shift(b, k, j - k + 1) + macaulay_shift(b, k, j - k)
    return macaulay_shift(b, k, d - j - k)


def gk_dimension_free_bound(b: int, k: int, j: int) -> int:
    """``b^<k,j-k+1> + b^<k,j-k>``; holds for every ``d >= j + k``."""
    if not j >= k >= 1:
        raise PreconditionError(f"need j >= k >= 1, got j = {j}, k = {k}")
    return macaulay_shift(b, k, j - k + 1) + macaulay_shift(b, k, j - k)


@dataclass(frozen=True)
class EmptySimplexBoundReport:
    d: int
    g: GVector
    per_degree: dict[int, int]
    vanishing_range: tuple[int, int] | None
    cumulative: dict[int, int]
    total: int

    @property
    def per_dimension(self) -> dict[int, int]:
        return {j - 1: v for j, v in self.per_degree.items()}

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "g": list(self.g.entries),
            "per_degree": {str(j): v for j, v in sorted(self.per_degree.items())},
            "per_dimension": {str(j): v for j, v in sorted(self.per_dimension.items())},
            "cumulative": {str(k): v for k, v in sorted(self.cumulative.items())},
            "total": self.total,
            "vanishing_range": list(self.vanishing_range) if self.vanishing_range else None,
        }


def bound_report(g, d: int) -> EmptySimplexBoundReport:
    g = _as_g(g)
    _check_dimension(g, d)
    per_degree = {j: generator_degree_bound(g, d, j) for j in range(2, d + 2)}
    if g.u == 0:
        cumulative = {k: (1 if k >= d else 0) for k in range(1, d + 1)}
        total = 1
    else:
        cumulative = {k: cumulative_bound(g, d, k) for k in range(1, d)}
        total = total_bound(g)
    return EmptySimplexBoundReport(
        d=d,
        g=g,
        per_degree=per_degree,
        vanishing_range=vanishing_range(g, d),
        cumulative=cumulative,
        total=total,
    )
