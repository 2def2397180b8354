"""Monomial ideals: lex-segment construction and Eliahou-Kervaire Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..betti import BettiTable, HilbertFunction
from ..binomial import binom
from ..errors import SizeLimitError, ValidationError

__all__ = [
    "DEFAULT_GENERATOR_LIMIT",
    "MonomialIdeal",
    "lex_monomials",
    "lex_segment_ideal",
    "lex_ideal_in_degree",
    "is_stable",
    "eliahou_kervaire_betti",
]

DEFAULT_GENERATOR_LIMIT = 200

Monomial = tuple[int, ...]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def max_index(m: Monomial) -> int:
    """1-based index of the last variable occurring in ``m`` (0 for ``m = 1``)."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    return 0


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators given as exponent vectors in ``n_vars`` variables."""

    n_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.n_vars:
                raise ValidationError(f"exponent vector {g} has wrong length for {self.n_vars} variables")
            if any(e < 0 for e in g):
                raise ValidationError(f"negative exponent in {g}")
        for a in range(len(gens)):
            for b in range(len(gens)):
                if a != b and _divides(gens[a], gens[b]):
                    raise ValidationError(f"generators are not minimal: {gens[a]} divides {gens[b]}")

    def contains(self, m: Sequence[int]) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def to_json(self) -> dict:
        return {"n": self.n_vars, "gens": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, doc: dict) -> "MonomialIdeal":
        return cls(int(doc["n"]), tuple(tuple(g) for g in doc["gens"]))


@lru_cache(maxsize=None)
def lex_monomials(n: int, degree: int) -> tuple[Monomial, ...]:
    """Degree-``degree`` monomials in ``n`` variables, largest first (``x_1 > ... > x_n``)."""
    if n == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in lex_monomials(n - 1, degree - first):
            out.append((first, *rest))
    return tuple(out)


def _times_variables(monomials: Iterable[Monomial], n: int) -> set[Monomial]:
    out = set()
    for m in monomials:
        for v in range(n):
            out.add(m[:v] + (m[v] + 1,) + m[v + 1 :])
    return out


def lex_segment_ideal(
    h, n: int, *, extend: bool = False, generator_limit: int = DEFAULT_GENERATOR_LIMIT
) -> MonomialIdeal:
    """Minimal generators of the lex-segment ideal with quotient Hilbert function ``h``."""
    hf = h if isinstance(h, HilbertFunction) else HilbertFunction(h, extend)
    hf.validate(n)
    gens: list[Monomial] = []
    previous: tuple[Monomial, ...] = ()
    for k in range(1, hf.top_degree + 2):
        monomials = lex_monomials(n, k)
        size = len(monomials) - hf(k)
        if size < 0:
            raise ValidationError(f"h({k}) = {hf(k)} exceeds the number of monomials")
        segment = monomials[:size]
        inherited = _times_variables(previous, n)
        if not inherited.issubset(segment):
            raise ValidationError(f"degree {k} lex segment does not contain m * I_{k - 1}")
        gens.extend(m for m in segment if m not in inherited)
        if len(gens) > generator_limit:
            raise SizeLimitError(f"lex ideal has more than {generator_limit} generators")
        previous = segment
    return MonomialIdeal(n, tuple(gens))


def lex_ideal_in_degree(n: int, d: int, b: int) -> MonomialIdeal:
    """Ideal generated by the first ``binom(n+d-1, d) - b`` degree-``d`` monomials."""
    monomials = lex_monomials(n, d)
    if not 0 <= b <= len(monomials):
        raise ValidationError(f"Hilbert value {b} out of range for degree {d}")
    return MonomialIdeal(n, monomials[: len(monomials) - b])


def is_stable(ideal: MonomialIdeal) -> bool:
    """``m * x_i / x_max(m)`` lies in the ideal for every generator ``m`` and ``i < max(m)``."""
    for g in ideal.generators:
        top = max_index(g) - 1
        for i in range(top):
            swapped = list(g)
            swapped[i] += 1
            swapped[top] -= 1
            if not ideal.contains(swapped):
                return False
    return True


def eliahou_kervaire_betti(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of ``R/I`` for a stable monomial ideal ``I``."""
    if not is_stable(ideal):
        raise ValidationError("Eliahou-Kervaire resolution needs a stable ideal")
    table = BettiTable(ideal.n_vars, {(0, 0): 1})
    for g in ideal.generators:
        top = max_index(g)
        degree = sum(g)
        for i in range(top):
            table.add(i + 1, i + degree, binom(top - 1, i))
    return table
