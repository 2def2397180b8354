"""Closed-form graded Betti numbers of lex-segment ideals and the bounds they give.

Betti numbers are indexed as ``(i, j)``: homological degree ``i`` and internal
degree ``j``.  The closed forms are stated in the shifted form
``beta_{i+1, i+d}``; :func:`betti_bound` keeps that convention while
:class:`BettiTable` and :func:`betti_entry` use plain ``(i, j)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .binomial import binom, binomial_expansion, macaulay_upper
from .errors import PreconditionError, ValidationError
from .vectors import HVector, h_to_g, is_o_sequence, is_si_sequence

__all__ = [
    "BettiTable",
    "HilbertFunction",
    "linear_resolution_betti",
    "lex_betti_single_degree",
    "betti_bound",
    "betti_entry",
    "betti_table_bound",
    "cm_betti_bound",
    "cm_betti_table",
    "gorenstein_wlp_bound",
    "gorenstein_wlp_table",
]


@dataclass
class BettiTable:
    """Sparse graded Betti table of a cyclic module ``R/I`` over ``n`` variables."""

    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {
            (int(i), int(j)): int(v) for (i, j), v in self.entries.items() if v != 0
        }

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.get(*key)

    def add(self, i: int, j: int, value: int) -> None:
        total = self.entries.get((i, j), 0) + value
        if total:
            self.entries[(i, j)] = total
        else:
            self.entries.pop((i, j), None)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self.entries.items()))

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def row(self, i: int) -> dict[int, int]:
        """Internal degree -> count for homological degree ``i``."""
        return {j: v for (a, j), v in sorted(self.entries.items()) if a == i}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"i": i, "j": j, "value": v} for (i, j), v in self.items()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "BettiTable":
        return cls(doc["n"], {(e["i"], e["j"]): e["value"] for e in doc["entries"]})

    def format(self) -> str:
        """Macaulay2-style display: columns ``i``, rows ``j - i``."""
        if not self.entries:
            return "(zero table)"
        max_i = max(i for i, _ in self.entries)
        shifts = sorted({j - i for i, j in self.entries})
        cols = list(range(max_i + 1))
        cells = [[str(self.get(i, i + s)) if self.get(i, i + s) else "." for i in cols] for s in shifts]
        header = [str(i) for i in cols]
        totals = [str(self.total(i)) for i in cols]
        width = max(len(c) for c in header + totals + [c for row in cells for c in row])
        label = max(len("total:"), max(len(f"{s}:") for s in shifts))
        lines = [" " * label + " " + " ".join(c.rjust(width) for c in header)]
        lines.append("total:".rjust(label) + " " + " ".join(c.rjust(width) for c in totals))
        for s, row in zip(shifts, cells):
            lines.append(f"{s}:".rjust(label) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


class HilbertFunction:
    """Finitely many values ``h(0), ..., h(r)``; zero beyond, or maximal growth.

    With ``extend=True`` the function continues by ``h(k+1) = h(k)^<k>`` past
    the last given degree, which describes algebras of positive dimension.
    """

    def __init__(self, values: Sequence[int], extend: bool = False):
        self.values = tuple(int(v) for v in values)
        self.extend = extend
        self._cache: dict[int, int] = {}

    def __call__(self, k: int) -> int:
        if k < 0:
            return 0
        if k < len(self.values):
            return self.values[k]
        if not self.extend:
            return 0
        if k not in self._cache:
            if k == 1:
                raise ValidationError("maximal growth needs h(1) to be given")
            self._cache[k] = macaulay_upper(self(k - 1), k - 1)
        return self._cache[k]

    @property
    def top_degree(self) -> int:
        """Largest degree that can carry minimal generators of the lex ideal, minus one."""
        if self.extend:
            return len(self.values) - 1
        r = len(self.values) - 1
        while r > 0 and self.values[r] == 0:
            r -= 1
        return r

    def validate(self, n: int) -> None:
        check = is_o_sequence(self.values)
        if not check:
            raise ValidationError(f"not an O-sequence: {check.reason}")
        if self(1) > n:
            raise ValidationError(f"too few variables: h(1) = {self(1)} > n = {n}")


def _as_hilbert(h, extend: bool) -> HilbertFunction:
    if isinstance(h, HilbertFunction):
        return h
    if isinstance(h, HVector):
        h = h.entries
    return HilbertFunction(h, extend)


def linear_resolution_betti(hilbert: Callable[[int], int] | Sequence[int], d: int, n: int, i: int) -> int:
    """Total Betti number ``beta_i`` of a module with a ``d``-linear resolution.

    ``hilbert`` maps a degree to the module's Hilbert function value (a
    sequence is indexed by degree).
    """
    value_at = hilbert if callable(hilbert) else (lambda k: hilbert[k])
    total = sum((-1) ** j * value_at(d + j) * binom(n, i - j) for j in range(i + 1))
    if total < 0:
        raise ValidationError(
            f"negative Betti number {total}: input is not the Hilbert function "
            f"of a module with a {d}-linear resolution"
        )
    return total


def _lower_sum(expansion, n: int, i: int) -> int:
    # sum_k sum_{j=0}^{m_k-k} binom(m_k-1-j, k-1) binom(n-1-j, i)
    return sum(
        binom(m - 1 - j, k - 1) * binom(n - 1 - j, i)
        for m, k in expansion
        for j in range(m - k + 1)
    )


def _upper_sum(expansion, n: int, i: int) -> int:
    # sum_k sum_{j=0}^{n_k-k} binom(n_k-j, k) binom(n-1-j, i)
    return sum(
        binom(m - j, k) * binom(n - 1 - j, i)
        for m, k in expansion
        for j in range(m - k + 1)
    )


def lex_betti_single_degree(b: int, d: int, n: int, i: int) -> int:
    """``beta_{i+1, i+d}(R/I)`` for the lex ideal ``I`` generated in degree ``d``
    with ``h_{R/I}(d) = b``."""
    if d < 1:
        raise ValidationError(f"generator degree must be positive, got {d}")
    top = binom(n + d - 1, d)
    if not 0 <= b <= top:
        raise ValidationError(f"invalid Hilbert value {b}: must lie in [0, {top}]")
    return binom(n + d - 1, d + i) * binom(d + i - 1, d - 1) - _lower_sum(
        binomial_expansion(b, d), n, i
    )


def _betti_shifted(hf: HilbertFunction, n: int, i: int, d: int) -> int:
    if i <= -1:
        return 1 if (i + 1, i + d) == (0, 0) else 0
    if d <= 0:
        return 0
    if d == 1:
        return binom(n - hf(1), i + 1)
    return _upper_sum(binomial_expansion(hf(d - 1), d - 1), n, i) - _lower_sum(
        binomial_expansion(hf(d), d), n, i
    )


def betti_bound(h, n: int, i: int, d: int, *, extend: bool = False) -> int:
    """``beta_{i+1, i+d}(h, n)``: the lex-segment Betti number bound.

    ``h`` is a Hilbert function given by its values from degree 0 (an
    O-sequence); ``extend`` selects maximal growth beyond the listed values.
    """
    hf = _as_hilbert(h, extend)
    hf.validate(n)
    return _betti_shifted(hf, n, i, d)


def betti_entry(h, n: int, i: int, j: int, *, extend: bool = False) -> int:
    """The same bound addressed as ``beta_{i, j}(h, n)``."""
    return betti_bound(h, n, i - 1, j - i + 1, extend=extend)


def _entry_unchecked(hf: HilbertFunction, n: int, i: int, j: int) -> int:
    return _betti_shifted(hf, n, i - 1, j - i + 1)


def betti_table_bound(h, n: int, *, extend: bool = False) -> BettiTable:
    """All ``beta_{i,j}(h, n)``; equal to the Betti table of the lex ideal."""
    hf = _as_hilbert(h, extend)
    hf.validate(n)
    table = BettiTable(n, {(0, 0): 1})
    for d in range(1, hf.top_degree + 2):
        for i in range(n):
            value = _betti_shifted(hf, n, i, d)
            if value < 0:
                raise ValidationError(f"negative value at ({i + 1}, {i + d}); invalid input")
            table.add(i + 1, i + d, value)
    return table


def cm_betti_bound(hvec, n: int, dim: int, i: int, j: int) -> int:
    """Bound on ``beta_{i+1, i+j}`` of a Cohen-Macaulay algebra of Krull
    dimension ``dim`` via the h-vector of its Artinian reduction."""
    hf = _as_hilbert(hvec, False)
    if n - dim < hf(1):
        raise ValidationError(
            f"inconsistent input: n - dim = {n - dim} < h_1 = {hf(1)}"
        )
    return betti_bound(hf, n - dim, i, j)


def cm_betti_table(hvec, n: int, dim: int) -> BettiTable:
    hf = _as_hilbert(hvec, False)
    if n - dim < hf(1):
        raise ValidationError(
            f"inconsistent input: n - dim = {n - dim} < h_1 = {hf(1)}"
        )
    reduced = betti_table_bound(hf, n - dim)
    return BettiTable(n, reduced.entries)


def _gorenstein_setup(h, n: int, d: int):
    values = tuple(h.entries if isinstance(h, HVector) else h)
    check = is_si_sequence(values)
    if not check:
        raise ValidationError(check.reason)
    g = h_to_g(HVector(values))
    m = n - d - 1
    if m < g.g1:
        raise PreconditionError(f"m = n - d - 1 = {m} is smaller than g_1 = {g.g1}")
    return values, g, m


def _gorenstein_value(values, g, m: int, i: int, j: int) -> int:
    r = len(values) - 1
    u = g.u
    h1 = values[1] if r >= 1 else 0
    gf = HilbertFunction(g.entries)
    first = _betti_shifted(gf, m, i, j)
    a, b = g.g1 - i, r + h1 - i - j
    dual = _betti_shifted(gf, m, a - 1, b - a + 1)
    if j <= r - u:
        return first
    if j <= u + 1:
        return first + dual
    return dual


def gorenstein_wlp_bound(h, n: int, d: int, i: int, j: int) -> int:
    """Bound on ``beta_{i+1, i+j}`` of a Gorenstein algebra of dimension ``d``
    with the Weak Lefschetz property and SI-sequence h-vector ``h``."""
    values, g, m = _gorenstein_setup(h, n, d)
    return _gorenstein_value(values, g, m, i, j)


def gorenstein_wlp_table(h, n: int, d: int) -> BettiTable:
    values, g, m = _gorenstein_setup(h, n, d)
    r = len(values) - 1
    table = BettiTable(n)
    for i in range(-1, m + 1):
        for j in range(0, r + 3):
            table.add(i + 1, i + j, _gorenstein_value(values, g, m, i, j))
    return table
