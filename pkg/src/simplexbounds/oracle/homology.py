"""Reduced simplicial homology and Hochster's formula for Stanley-Reisner rings."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from ..betti import BettiTable
from ..errors import SizeLimitError, ValidationError
from ..kernels import boundary_rank
from .complex import SimplicialComplex

__all__ = [
    "DEFAULT_VERTEX_LIMIT",
    "vertex_limit",
    "reduced_homology_ranks",
    "hochster_betti",
]

DEFAULT_VERTEX_LIMIT = 12
_MAX_PRIME = 2**31


def vertex_limit() -> int:
    """Default limit, overridable with ``EMPTY_SIMPLEX_VERTEX_LIMIT``."""
    raw = os.environ.get("EMPTY_SIMPLEX_VERTEX_LIMIT")
    if raw is None:
        return DEFAULT_VERTEX_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValidationError(f"EMPTY_SIMPLEX_VERTEX_LIMIT must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValidationError("EMPTY_SIMPLEX_VERTEX_LIMIT must be at least 1")
    return value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def check_characteristic(p: int) -> None:
    if p != 0 and not (_is_prime(p) and p < _MAX_PRIME):
        raise ValidationError(f"characteristic must be 0 or a prime below 2^31, got {p}")


def _check_size(c: SimplicialComplex, limit: int | None) -> None:
    limit = vertex_limit() if limit is None else limit
    if c.n_vertices > limit:
        raise SizeLimitError(f"{c.n_vertices} vertices exceed the limit of {limit}")


def _reduced_betti(layers: list[list[int]], p: int) -> dict[int, int]:
    """Reduced homology ranks keyed by dimension, from faces grouped by size."""
    ranks = [0] * (len(layers) + 1)
    for s in range(1, len(layers)):
        ranks[s] = boundary_rank(layers[s], layers[s - 1], p)
    return {
        s - 1: len(layers[s]) - ranks[s] - ranks[s + 1]
        for s in range(len(layers))
        if len(layers[s]) - ranks[s] - ranks[s + 1]
    }


def reduced_homology_ranks(
    c: SimplicialComplex, characteristic: int = 0, *, limit: int | None = None
) -> list[int]:
    """``[dim H~_0, dim H~_1, ..., dim H~_dim]`` over a field of the given characteristic."""
    check_characteristic(characteristic)
    _check_size(c, limit)
    betti = _reduced_betti(c.faces_by_size, characteristic)
    return [betti.get(k, 0) for k in range(c.dimension + 1)]


def _restricted_counts(layers: list[list[int]], subsets: range, p: int) -> Counter:
    counts: Counter = Counter()
    for w in subsets:
        outside = ~w
        sub = [[f for f in layer if not f & outside] for layer in layers]
        while len(sub) > 1 and not sub[-1]:
            sub.pop()
        size = bin(w).count("1")
        for k, rank in _reduced_betti(sub, p).items():
            counts[(size - k - 1, size)] += rank
    return counts


def hochster_betti(
    c: SimplicialComplex,
    characteristic: int = 0,
    *,
    limit: int | None = None,
    threads: int = 1,
) -> BettiTable:
    """Graded Betti numbers of the Stanley-Reisner ring of ``c``.

    Sums ``dim H~_{j-i-1}`` of the induced subcomplex over every vertex set of
    size ``j``.  With ``threads > 1`` the subsets are split into contiguous
    chunks; the result does not depend on the thread count.
    """
    check_characteristic(characteristic)
    _check_size(c, limit)
    layers = c.faces_by_size
    total = 1 << c.n_vertices
    if threads <= 1:
        counts = _restricted_counts(layers, range(total), characteristic)
    else:
        step = -(-total // threads)
        chunks = [range(s, min(s + step, total)) for s in range(0, total, step)]
        counts = Counter()
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda r: _restricted_counts(layers, r, characteristic), chunks):
                counts.update(part)
    return BettiTable(c.n_vertices, dict(counts))
