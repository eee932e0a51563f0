"""Ext between twisted classical functors in the strict polynomial category.

Six (source, target) kind pairs have closed forms: (G,S), (G,L), (L,S),
(G,G), (S,S) and (L,L).  Each is a free algebra of a known type on
generators indexed by m, with tri-degree

    (2 m p^h + offset, 1, p^h)   source twisted more,
    (2 m p^h + offset, p^h, 1)   target twisted more,

where h is the twist difference and offset is 0, p^h - 1 or 2p^h - 2.  In P
only m < p^j occurs (j the smaller twist); the stable module drops that
bound.  Tensor words are handled by the Kunneth sum over splitting matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .basic_ext import check_prime, e_name, p_digits
from .core import (
    Family,
    GeneratorSpec,
    HopfPresentation,
    Kind,
    Token,
    TriDegree,
    convolve_series,
    presentation_series,
)
from .errors import InvalidParams, UnsupportedPair

G, L, S, I = Kind.GAMMA, Kind.LAMBDA, Kind.SYM, Kind.ID

# offset code: 0 -> 0, 1 -> p^h - 1, 2 -> 2p^h - 2
# word pattern: "E" is the e-class, other entries are token symbols
_FORMS = {
    (G, S): {"src": (Family.POLYNOMIAL, 0, ("phi", "E")),
             "tgt": (Family.POLYNOMIAL, 0, ("E", "phi#"))},
    (G, L): {"src": (Family.EXTERIOR, 1, ("kz", "phi", "E")),
             "tgt": (Family.EXTERIOR, 0, ("E", "phi#"))},
    (L, S): {"src": (Family.EXTERIOR, 0, ("phi", "E")),
             "tgt": (Family.EXTERIOR, 1, ("E", "phi#", "kz#"))},
    (G, G): {"src": (Family.DIVIDED_POWER, 2, ("kz#", "kz", "phi", "E")),
             "tgt": (Family.DIVIDED_POWER, 0, ("E", "phi#"))},
    (S, S): {"src": (Family.DIVIDED_POWER, 0, ("phi", "E")),
             "tgt": (Family.DIVIDED_POWER, 2, ("E", "phi#", "kz#", "kz"))},
    (L, L): {"src": (Family.DIVIDED_POWER, 1, ("kz", "phi", "E")),
             "tgt": (Family.DIVIDED_POWER, 1, ("E", "phi#", "kz#"))},
}

SUPPORTED_PAIRS = tuple(_FORMS)


def is_supported(src_kind: Kind, tgt_kind: Kind) -> bool:
    return (src_kind, tgt_kind) in _FORMS


def family_form(src_kind: Kind, tgt_kind: Kind, source_more_twisted: bool):
    """(family, offset code, word pattern) of a supported pair."""
    try:
        forms = _FORMS[(src_kind, tgt_kind)]
    except KeyError:
        raise UnsupportedPair(src_kind.name, tgt_kind.name) from None
    return forms["src" if source_more_twisted else "tgt"]


def family_generator(p, src_kind, tgt_kind, h, m, source_more_twisted, e_tokens,
                     low_twist=0):
    """The m-th generator of a family with twist difference h."""
    family, code, pattern = family_form(src_kind, tgt_kind, source_more_twisted)
    ph = p ** h
    coh = 2 * m * ph + (0, ph - 1, 2 * ph - 2)[code]
    deg = TriDegree(coh, 1, ph) if source_more_twisted else TriDegree(coh, ph, 1)
    word = []
    for sym in pattern:
        if sym == "E":
            word.extend(e_tokens)
        elif h:
            # phi_0 and kz_0 are identities and are left out of the word
            word.append(Token(sym, h, low_twist))
    return family, GeneratorSpec(tuple(word), deg)


@dataclass(frozen=True)
class FunctorAtom:
    kind: Kind
    star: int
    twist: int = 0

    def __post_init__(self):
        if self.star < 0 or self.twist < 0:
            raise InvalidParams(f"negative index in {self}")
        if self.kind is Kind.ID and self.star != 1:
            raise InvalidParams("the identity functor has star index 1")

    def degree(self, p: int) -> int:
        return self.star * p ** self.twist

    def dual(self) -> "FunctorAtom":
        return replace(self, kind=self.kind.dual)

    def render(self) -> str:
        s = self.kind.value
        if self.kind is not Kind.ID and self.star != 1:
            s += f"^{self.star}"
        if self.twist:
            s += f"({self.twist})"
        return s


@dataclass(frozen=True)
class FunctorWord:
    factors: tuple[FunctorAtom, ...]

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(factors))

    def degree(self, p: int) -> int:
        return sum(a.degree(p) for a in self.factors)

    def dual(self) -> "FunctorWord":
        return FunctorWord(a.dual() for a in reversed(self.factors))

    def render(self) -> str:
        return "*".join(a.render() for a in self.factors) or "1"


@dataclass(frozen=True)
class ExtQuery:
    category: str
    p: int
    source: FunctorWord
    target: FunctorWord
    N: int | None = field(default=None)

    def __post_init__(self):
        if self.category not in ("P", "stable", "F"):
            raise InvalidParams(f"unknown category {self.category!r}")
        if self.category == "F" and (self.N is None or self.N < 1):
            raise InvalidParams("category F needs N >= 1")


def dualize(q: ExtQuery) -> ExtQuery:
    """Swap source and target, reverse factor order and exchange S and G."""
    return replace(q, source=q.target.dual(), target=q.source.dual())


def normalize_kinds(src_kind: Kind, tgt_kind: Kind) -> tuple[Kind, Kind]:
    """Replace identity atoms by a degree-one functor giving a supported pair."""
    srcs = (G, L, S) if src_kind is I else (src_kind,)
    tgts = (S, L, G) if tgt_kind is I else (tgt_kind,)
    for a in srcs:
        for b in tgts:
            if is_supported(a, b):
                return a, b
    return srcs[0], tgts[0]


def ext_pair_P(p: int, src: FunctorAtom, tgt: FunctorAtom) -> HopfPresentation:
    """Presentation of Ext_P(src^{*(a)}, tgt^{*(b)}) for a supported pair.

    The generators depend only on p and the two twists; read the
    coefficient at (s, src.star, tgt.star) for a specific Ext group.
    """
    check_prime(p)
    a, b = normalize_kinds(src.kind, tgt.kind)
    if not is_supported(a, b):
        raise UnsupportedPair(a.name, b.name)
    j, r = sorted((src.twist, tgt.twist))
    h = r - j
    more = src.twist > tgt.twist
    gens = []
    family = None
    for m in range(p ** j):
        e_tokens = e_name(p, r, m * p ** h).tokens if r else ()
        family, g = family_generator(p, a, b, h, m, more, e_tokens, low_twist=j)
        gens.append(g)
    return HopfPresentation(family, tuple(gens))


@lru_cache(maxsize=None)
def _atom_series(p, src, tgt, max_coh):
    return tuple(presentation_series(ext_pair_P(p, src, tgt), src.star, tgt.star, max_coh))


def ext_pair_series(p: int, src: FunctorAtom, tgt: FunctorAtom, max_coh: int) -> list[int]:
    """dim Ext^s_P(src, tgt) for s = 0..max_coh."""
    if src.star == 0 or tgt.star == 0:
        unit = int(src.degree(p) == tgt.degree(p))
        return [unit] + [0] * max_coh
    return list(_atom_series(p, src, tgt, max_coh))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def splitting_matrices(p: int, src: FunctorWord, tgt: FunctorWord):
    """Yield the cells of every admissible splitting matrix.

    A matrix assigns a_{s,t} >= 0 with row sums equal to the source star
    indices.  The target index of a cell is forced by matching degrees,
    b = a p^{j_s} / p^{r_t}; a non-integral b kills the matrix, and the
    b's must add up to the target star indices column by column.  Each
    yielded item lists (source atom, target atom) pairs for cells with a > 0.
    """
    rows, cols = src.factors, tgt.factors
    need = [c.star for c in cols]

    def rec(si, remaining, cells):
        if si == len(rows):
            if not any(remaining):
                yield list(cells)
            return
        row = rows[si]
        for split in _compositions(row.star, len(cols)):
            rem = list(remaining)
            new = []
            ok = True
            for t, a in enumerate(split):
                if not a:
                    continue
                num = a * p ** row.twist
                den = p ** cols[t].twist
                if num % den or num // den > rem[t]:
                    ok = False
                    break
                b = num // den
                rem[t] -= b
                new.append((replace(row, star=a) if row.kind is not I else row,
                            replace(cols[t], star=b) if cols[t].kind is not I else cols[t]))
            if ok:
                yield from rec(si + 1, rem, cells + new)

    yield from rec(0, need, [])


def ext_word_series(p: int, src: FunctorWord, tgt: FunctorWord, max_coh: int) -> list[int]:
    """dim Ext^s_P between tensor words for s = 0..max_coh."""
    check_prime(p)
    if max_coh < 0:
        raise InvalidParams("max_coh must be nonnegative")
    total = [0] * (max_coh + 1)
    if src.degree(p) != tgt.degree(p):
        return total
    for cells in splitting_matrices(p, src, tgt):
        acc = [1] + [0] * max_coh
        for a, b in cells:
            acc = convolve_series(acc, ext_pair_series(p, a, b, max_coh))
            if not any(acc):
                break
        total = [x + y for x, y in zip(total, acc)]
    return total


def ext_word_P(p: int, src: FunctorWord, tgt: FunctorWord, s: int) -> int:
    if s < 0:
        raise InvalidParams("coh degree must be nonnegative")
    return ext_word_series(p, src, tgt, s)[s]


def splitting_criterion(p: int, n: int, m: int) -> bool:
    """True iff every p-adic digit of m is at most the matching digit of n."""
    if not 0 <= m <= n:
        raise InvalidParams("need 0 <= m <= n")
    length = max(n, 1).bit_length()
    return all(a <= b for a, b in zip(p_digits(m, p, length), p_digits(n, p, length)))


def supported_atom_pairs(p: int, max_twist: int, max_star: int):
    """All supported atom pairs of equal degree within the given bounds."""
    kinds = (G, L, S)
    for a, b in itertools.product(kinds, kinds):
        if not is_supported(a, b):
            continue
        for ra, rb in itertools.product(range(max_twist + 1), repeat=2):
            for da in range(1, max_star + 1):
                num = da * p ** ra
                if num % p ** rb:
                    continue
                db = num // p ** rb
                if db <= max_star:
                    yield FunctorAtom(a, da, ra), FunctorAtom(b, db, rb)
