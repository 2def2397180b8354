"""Exhaustive generators shared by the test modules.

These use a direct growth check written here (not ``is_o_sequence``) so
the enumerations stay independent of the code under test.
"""

from __future__ import annotations

from math import comb


def _greedy_terms(b: int, d: int) -> list[tuple[int, int]]:
    terms = []
    k = d
    while b > 0:
        m = k
        while comb(m + 1, k) <= b:
            m += 1
        terms.append((m, k))
        b -= comb(m, k)
        k -= 1
    return terms


def growth_bound(b: int, d: int) -> int:
    return sum(comb(m + 1, k + 1) for m, k in _greedy_terms(b, d))


def o_sequences(n: int, max_socle: int):
    """Artinian O-sequences ``(1, h_1, ..., h_r)`` with ``h_1 <= n``, ``r <= max_socle``
    and ``h_r > 0``."""
    yield (1,)

    def extend(seq):
        yield tuple(seq)
        j = len(seq) - 1
        if j >= max_socle:
            return
        top = growth_bound(seq[-1], j)
        for v in range(1, top + 1):
            yield from extend(seq + [v])

    for h1 in range(1, n + 1):
        yield from extend([1, h1])


def g_vectors(max_u: int, max_g1: int):
    """g-vectors ``(1, g_1, ..., g_u)`` with positive entries, ``1 <= u <= max_u``."""
    for seq in set().union(*(set(o_sequences(g1, max_u)) for g1 in range(1, max_g1 + 1))):
        if len(seq) >= 2 and seq[1] <= max_g1:
            yield seq


def sorted_g_vectors(max_u: int, max_g1: int):
    return sorted(g_vectors(max_u, max_g1))
