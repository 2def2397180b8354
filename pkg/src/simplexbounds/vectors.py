"""f-, h- and g-vectors of simplicial polytopes, O-sequences and SI-sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .binomial import binom, macaulay_upper
from .errors import PreconditionError, ValidationError

__all__ = [
    "SequenceCheck",
    "FVector",
    "HVector",
    "GVector",
    "f_to_h_entries",
    "h_to_f_entries",
    "f_to_h",
    "h_to_f",
    "h_to_g",
    "g_to_h",
    "is_o_sequence",
    "is_si_sequence",
    "vector_to_json",
    "vector_from_json",
]


@dataclass(frozen=True)
class SequenceCheck:
    """Outcome of a sequence test; falsy on failure.

    ``index`` is the first offending position and ``reason`` says why.
    """

    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


_PASS = SequenceCheck(True)


def is_o_sequence(seq: Iterable[int]) -> SequenceCheck:
    """Check ``h_0 = 1`` and Macaulay's growth bound ``h_{j+1} <= h_j^<j>``."""
    h = list(seq)
    if not h or h[0] != 1:
        return SequenceCheck(False, 0, "h_0 must be 1")
    for j, value in enumerate(h):
        if value < 0:
            return SequenceCheck(False, j, f"entry {j} is negative")
    for j in range(1, len(h) - 1):
        bound = macaulay_upper(h[j], j)
        if h[j + 1] > bound:
            return SequenceCheck(
                False, j + 1, f"h_{j + 1} = {h[j + 1]} exceeds h_{j}^<{j}> = {bound}"
            )
    return _PASS


def _half_differences(h: Sequence[int]) -> list[int]:
    d = len(h) - 1
    return [h[0]] + [h[i] - h[i - 1] for i in range(1, d // 2 + 1)]


def is_si_sequence(seq: Iterable[int]) -> SequenceCheck:
    """Symmetric sequence whose first-half difference vector is an O-sequence."""
    h = list(seq)
    if not h:
        return SequenceCheck(False, 0, "not an SI-sequence: empty")
    d = len(h) - 1
    for i in range(d + 1):
        if h[i] != h[d - i]:
            return SequenceCheck(
                False, i, f"not an SI-sequence: h_{i} != h_{d - i} (Dehn-Sommerville)"
            )
    check = is_o_sequence(_half_differences(h))
    if not check:
        return SequenceCheck(
            False, check.index, f"not an SI-sequence: difference vector fails ({check.reason})"
        )
    return _PASS


@dataclass(frozen=True)
class FVector:
    """Face numbers ``(f_{-1}, f_0, ..., f_{d-1})`` with ``f_{-1} = 1``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) < 2:
            raise ValidationError("an f-vector needs f_{-1} and at least f_0")
        if self.entries[0] != 1:
            raise ValidationError("f_{-1} must be 1")
        for i, x in enumerate(self.entries):
            if x <= 0:
                raise ValidationError(f"f_{i - 1} = {x} is not positive")

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "FVector":
        """Build from ``(f_0, ..., f_{d-1})``, without the leading 1."""
        return cls((1, *counts))

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        return self.entries[1:]


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries or self.entries[0] != 1:
            raise ValidationError("h_0 must be 1")
        for i, x in enumerate(self.entries):
            if x < 0:
                raise ValidationError(f"h_{i} = {x} is negative")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


@dataclass(frozen=True)
class GVector:
    """``(g_0, ..., g_u)``: positive entries forming an O-sequence.

    Trailing zeros are never stored; :meth:`get` reads ``g_i = 0`` for ``i > u``.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries or self.entries[0] != 1:
            raise ValidationError("g_0 must be 1")
        for i, x in enumerate(self.entries):
            if x <= 0:
                raise ValidationError(f"g_{i} = {x} is not positive")
        check = is_o_sequence(self.entries)
        if not check:
            raise ValidationError(f"g-vector is not an O-sequence: {check.reason}")

    @property
    def u(self) -> int:
        return len(self.entries) - 1

    @property
    def g1(self) -> int:
        return self.get(1)

    def get(self, i: int) -> int:
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return 0

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def f_to_h_entries(f: Sequence[int]) -> list[int]:
    """Coefficients of ``sum_j f_{j-1} z^j (1-z)^{d-j}`` for ``f = (f_{-1}, ...)``."""
    d = len(f) - 1
    return [
        sum((-1) ** (k - j) * binom(d - j, k - j) * f[j] for j in range(k + 1))
        for k in range(d + 1)
    ]


def h_to_f_entries(h: Sequence[int]) -> list[int]:
    """``f_{j-1} = sum_i binom(d-i, j-i) h_i``."""
    d = len(h) - 1
    return [sum(binom(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1)]


def f_to_h(f: FVector) -> HVector:
    h = f_to_h_entries(f.entries)
    for i, x in enumerate(h):
        if x < 0:
            raise ValidationError(
                f"f-vector is not polytopal: h_{i} = {x} is negative"
            )
    return HVector(tuple(h))


def h_to_f(h: HVector, d: int | None = None) -> FVector:
    if d is not None and h.d != d:
        raise ValidationError(f"h-vector has length {h.d + 1}, expected d + 1 = {d + 1}")
    return FVector(tuple(h_to_f_entries(h.entries)))


def h_to_g(h: HVector) -> GVector:
    check = is_si_sequence(h.entries)
    if not check:
        raise ValidationError(check.reason)
    diffs = _half_differences(h.entries)
    u = 0
    for j in range(1, len(diffs)):
        if diffs[j] > 0:
            u = j
    return GVector(tuple(diffs[: u + 1]))


def g_to_h(g: GVector, d: int) -> HVector:
    """Recover the h-vector of a simplicial ``d``-polytope from its g-vector."""
    u = g.u
    if 2 * u > d:
        raise PreconditionError(f"dimension too small: 2u = {2 * u} > d = {d}")
    h = [0] * (d + 1)
    running = 0
    for j in range(u + 1):
        running += g[j]
        h[j] = running
    for j in range(u + 1, d - u + 1):
        h[j] = running
    for j in range(d - u + 1, d + 1):
        h[j] = h[d - j]
    return HVector(tuple(h))


def vector_to_json(vec: FVector | HVector | GVector) -> dict:
    kind = {FVector: "f", HVector: "h", GVector: "g"}[type(vec)]
    doc = {"kind": kind, "entries": list(vec.entries)}
    if kind != "g":
        doc["d"] = vec.d
    return doc


def vector_from_json(doc: dict) -> FVector | HVector | GVector:
    kind = doc.get("kind")
    entries = tuple(doc["entries"])
    if kind == "f":
        vec = FVector(entries)
    elif kind == "h":
        vec = HVector(entries)
    elif kind == "g":
        return GVector(entries)
    else:
        raise ValidationError(f"unknown vector kind {kind!r}")
    if "d" in doc and doc["d"] is not None and doc["d"] != vec.d:
        raise ValidationError(f"declared d = {doc['d']} does not match entries")
    return vec
