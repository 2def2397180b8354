"""Exact binomial coefficients and Macaulay's binomial expansions.

Everything here works on Python integers, so values never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BinomialExpansion",
    "binom",
    "binomial_expansion",
    "macaulay_shift",
    "macaulay_upper",
    "macaulay_lower",
]


def binom(a: int, j: int) -> int:
    """Generalized binomial coefficient ``a(a-1)...(a-j+1)/j!``.

    ``a`` may be any integer (including negative ones); ``binom(a, 0) == 1``
    and ``binom(a, j) == 0`` for ``j < 0``.

    >>> binom(5, 2), binom(-2, 2), binom(7, -1)
    (10, 3, 0)
    """
    if j < 0:
        return 0
    if j == 0:
        return 1
    if a >= 0:
        # math.comb returns 0 when j > a, which is where the falling
        # factorial hits a zero factor.
        return math.comb(a, j)
    # (-a)(-a-1)... = (-1)^j (j-a-1 choose j)
    value = math.comb(j - a - 1, j)
    return -value if j % 2 else value


@dataclass(frozen=True)
class BinomialExpansion:
    """The ``degree``-binomial expansion ``b = sum binom(m_k, k)``.

    ``terms`` holds ``(m_k, k)`` pairs for ``k = degree, degree-1, ..., s``.
    """

    degree: int
    terms: tuple[tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        return sum(binom(m, k) for m, k in self.terms)

    def shift(self, j: int) -> int:
        return sum(binom(m + j, k + j) for m, k in self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def _largest_top(b: int, k: int) -> int:
    """Largest ``m`` with ``binom(m, k) <= b``; requires ``b >= 1``, ``k >= 1``."""
    lo = k  # binom(k, k) == 1 <= b
    hi = k + 1
    while math.comb(hi, k) <= b:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, k) <= b:
            lo = mid
        else:
            hi = mid
    return lo


def binomial_expansion(b: int, d: int) -> BinomialExpansion:
    """Greedy ``d``-binomial expansion of ``b >= 0``.

    >>> binomial_expansion(8, 3).terms
    ((4, 3), (3, 2), (1, 1))
    """
    if d < 1:
        raise ValueError(f"expansion degree must be positive, got {d}")
    if b < 0:
        raise ValueError(f"cannot expand negative integer {b}")
    terms = []
    k = d
    while b > 0:
        # at k == 1 the greedy step takes m = b, so the loop ends by then
        m = _largest_top(b, k)
        terms.append((m, k))
        b -= math.comb(m, k)
        k -= 1
    return BinomialExpansion(d, tuple(terms))


def macaulay_shift(b: int, d: int, j: int) -> int:
    """``b^<d,j>``: shift both arguments of every expansion term by ``j``.

    ``b == 0`` gives 0 for every ``j``.
    """
    if b == 0:
        return 0
    return binomial_expansion(b, d).shift(j)


def macaulay_upper(b: int, d: int) -> int:
    """``b^<d>``, the Macaulay growth bound for a Hilbert function value."""
    return macaulay_shift(b, d, 1)


def macaulay_lower(b: int, d: int) -> int:
    """``b_<d>``, i.e. ``b^<d,-1>``."""
    return macaulay_shift(b, d, -1)
