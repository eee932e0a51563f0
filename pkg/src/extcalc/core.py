"""Graded dimension bookkeeping.

Every answer in the package is a table of dimensions: a graded vector space
is stored as ``degree -> dim`` and an Ext algebra as a list of generators
with tri-degrees (coh, src, tgt).  Dimensions are Python integers, so they
are exact and never wrap around.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParams


class Kind(enum.Enum):
    """Classical functor families, keyed by their single-letter symbol."""

    GAMMA = "G"
    LAMBDA = "L"
    SYM = "S"
    ID = "I"

    @property
    def dual(self) -> "Kind":
        return {Kind.GAMMA: Kind.SYM, Kind.SYM: Kind.GAMMA}.get(self, self)

    def __str__(self):
        return self.value


class Family(enum.Enum):
    """Algebra type of a presentation; decides the multiplicity rule."""

    POLYNOMIAL = "polynomial"
    EXTERIOR = "exterior"
    DIVIDED_POWER = "divided_power"


class GradedDims(Mapping):
    """Finitely supported map degree -> dimension.

    Absent degrees have dimension 0 and zero entries are never stored, so two
    tables are equal exactly when they agree in every degree.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for deg, dim in items:
            deg, dim = int(deg), int(dim)
            if deg < 0 or dim < 0:
                raise InvalidParams(f"bad graded entry {deg}:{dim}")
            if dim:
                clean[deg] = clean.get(deg, 0) + dim
        self._entries = dict(sorted(clean.items()))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "GradedDims":
        """One slot per listed degree (repeats accumulate)."""
        return cls((d, 1) for d in degrees)

    def __getitem__(self, deg):
        return self._entries.get(deg, 0)

    def __contains__(self, deg):
        return deg in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self._entries.items())
        return "GradedDims({" + body + "})"

    def total(self) -> int:
        return sum(self._entries.values())

    def shift(self, by: int) -> "GradedDims":
        return GradedDims((d + by, n) for d, n in self._entries.items())

    def max_degree(self) -> int:
        return max(self._entries, default=-1)

    def slots(self) -> list[int]:
        """Degrees of a basis, one entry per basis vector, ascending."""
        return [d for d, n in self._entries.items() for _ in range(n)]

    def as_series(self, max_degree: int) -> list[int]:
        return [self[d] for d in range(max_degree + 1)]


def graded_convolve(a: GradedDims, b: GradedDims) -> GradedDims:
    """Dimensions of a tensor product: result[n] = sum a[i] * b[n - i]."""
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return GradedDims(out)


def convolve_series(a: list[int], b: list[int]) -> list[int]:
    """Truncated convolution of two coefficient lists of equal length."""
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                out[i + j] += x * b[j]
    return out


def power_dims(space: GradedDims, d: int, flavor: str) -> GradedDims:
    """Graded dimension of S^d, Lambda^d or Gamma^d of a graded space.

    ``sym`` and ``gamma`` count size-d multisets of basis slots, ``ext``
    counts size-d subsets; the degree of a choice is the sum of its slots.
    """
    if flavor not in ("sym", "ext", "gamma"):
        raise InvalidParams(f"unknown flavor {flavor!r}")
    if d < 0:
        raise InvalidParams("power must be nonnegative")
    # layer[k] = graded dims of the k-th power of the slots seen so far
    layer: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(d)]
    for deg in space.slots():
        if flavor == "ext":
            for k in range(d, 0, -1):
                for n, c in layer[k - 1].items():
                    layer[k][n + deg] = layer[k].get(n + deg, 0) + c
        else:
            # ascending k lets a slot be reused any number of times
            for k in range(1, d + 1):
                for n, c in list(layer[k - 1].items()):
                    layer[k][n + deg] = layer[k].get(n + deg, 0) + c
    return GradedDims(layer[d])


@dataclass(frozen=True, order=True)
class TriDegree:
    coh: int
    src: int
    tgt: int

    def __post_init__(self):
        if min(self.coh, self.src, self.tgt) < 0:
            raise InvalidParams(f"negative tri-degree {self}")

    def __add__(self, other):
        return TriDegree(self.coh + other.coh, self.src + other.src, self.tgt + other.tgt)

    def scale(self, k: int) -> "TriDegree":
        return TriDegree(k * self.coh, k * self.src, k * self.tgt)

    def as_tuple(self):
        return (self.coh, self.src, self.tgt)


@dataclass(frozen=True)
class Token:
    """One letter of a generator word.

    ``symbol`` is one of ``e`` (a basic class e_k, ``sub`` = k, raised to
    ``power``), ``e()`` (a stable class e(sub)), ``phi``, ``phi#``, ``kz``,
    ``kz#`` (``sub`` = the twist length h).  ``twist`` is the Frobenius twist
    the token is precomposed with.
    """

    symbol: str
    sub: int
    twist: int = 0
    power: int = 1

    def render(self) -> str:
        tw = f"({self.twist})" if self.twist else ""
        if self.symbol == "e":
            pw = f"^{self.power}" if self.power != 1 or tw else ""
            return f"e_{self.sub}{pw}{tw}"
        if self.symbol == "e()":
            return f"e({self.sub}){tw}"
        base, sharp = self.symbol.rstrip("#"), self.symbol.endswith("#")
        return f"{base}{'#' if sharp else ''}_{self.sub}{tw}"

    def dual(self) -> "Token":
        if self.symbol in ("phi", "kz"):
            return Token(self.symbol + "#", self.sub, self.twist, self.power)
        if self.symbol in ("phi#", "kz#"):
            return Token(self.symbol[:-1], self.sub, self.twist, self.power)
        return self


@dataclass(frozen=True)
class GeneratorWord:
    tokens: tuple[Token, ...]
    coh: int

    def render(self) -> str:
        return "*".join(t.render() for t in self.tokens) or "1"


@dataclass(frozen=True)
class GeneratorSpec:
    word: tuple[Token, ...]
    degree: TriDegree

    @property
    def parity(self) -> str:
        return "odd" if self.degree.coh % 2 else "even"

    def render(self) -> str:
        return "*".join(t.render() for t in self.word) or "1"

    def dual(self) -> "GeneratorSpec":
        d = self.degree
        return GeneratorSpec(tuple(t.dual() for t in reversed(self.word)),
                             TriDegree(d.coh, d.tgt, d.src))


@dataclass(frozen=True)
class HopfPresentation:
    family: Family
    generators: tuple[GeneratorSpec, ...]
    primitively_generated: bool = field(default=True)

    def __post_init__(self):
        for g in self.generators:
            if g.degree.src < 1 or g.degree.tgt < 1:
                raise InvalidParams(f"generator {g.render()} has a zero index")

    def coefficient(self, t: TriDegree) -> int:
        return presentation_coefficient(self, t)

    def series(self, src: int, tgt: int, max_coh: int) -> list[int]:
        return presentation_series(self, src, tgt, max_coh)


def presentation_table(pres: HopfPresentation, max_coh: int, max_src: int,
                       max_tgt: int) -> np.ndarray:
    """Monomial counts for every tri-degree inside the given box.

    Returns an object array ``T`` with ``T[c, i, l]`` the number of monomials
    of tri-degree (c, i, l).  Generators are folded in one at a time; since
    each has src >= 1 a sweep over the src axis handles multiplicities.
    """
    table = np.zeros((max_coh + 1, max_src + 1, max_tgt + 1), dtype=object)
    table[0, 0, 0] = 1
    exterior = pres.family is Family.EXTERIOR
    for g in pres.generators:
        c, i, l = g.degree.as_tuple()
        if c > max_coh or i > max_src or l > max_tgt:
            continue
        rows = range(max_src, i - 1, -1) if exterior else range(i, max_src + 1)
        for a in rows:
            # descending keeps each generator to one use; ascending reuses
            table[c:, a, l:] += table[: max_coh + 1 - c, a - i, : max_tgt + 1 - l]
    return table


def presentation_series(pres: HopfPresentation, src: int, tgt: int,
                        max_coh: int) -> list[int]:
    """Coefficients at (s, src, tgt) for s = 0..max_coh."""
    table = presentation_table(pres, max_coh, src, tgt)
    return [int(x) for x in table[:, src, tgt]]


def presentation_coefficient(pres: HopfPresentation, t: TriDegree) -> int:
    """Number of monomials of tri-degree ``t`` (1 for the unit at (0,0,0))."""
    return int(presentation_table(pres, t.coh, t.src, t.tgt)[t.coh, t.src, t.tgt])
