"""Stable Ext (the limit over simultaneous Frobenius twists) and bound formulas.

The stable families have the same generators as in P with the bound m < p^j
removed, so a presentation is infinite and every call takes an explicit
coh cap.  The bounds are least integers solving threshold inequalities and
are computed with integer arithmetic only.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .basic_ext import check_prime
from .core import HopfPresentation, Kind, Token, presentation_series
from .errors import InvalidParams
from .pcalc import family_form, family_generator, normalize_kinds


class Direction(enum.Enum):
    SOURCE_TWISTED = "source"  # Ext(A^(h), B)
    TARGET_TWISTED = "target"  # Ext(A, B^(h))


@dataclass(frozen=True)
class StableFamily:
    p: int
    src_kind: Kind
    tgt_kind: Kind
    h: int
    direction: Direction = Direction.TARGET_TWISTED

    def __post_init__(self):
        check_prime(self.p)
        if self.h < 0:
            raise InvalidParams("relative twist must be nonnegative")


def ext_pair_stable(f: StableFamily, max_coh: int) -> HopfPresentation:
    """Generators of the stable family with coh degree at most ``max_coh``."""
    a, b = normalize_kinds(f.src_kind, f.tgt_kind)
    more = f.direction is Direction.SOURCE_TWISTED
    family = family_form(a, b, more)[0]
    gens = []
    m = 0
    while 2 * m * f.p ** f.h <= max_coh:
        e_tok = (Token("e()", m * f.p ** f.h),) if m else ()
        _, g = family_generator(f.p, a, b, f.h, m, more, e_tok)
        if g.degree.coh <= max_coh:
            gens.append(g)
        m += 1
    return HopfPresentation(family, tuple(gens))


@lru_cache(maxsize=None)
def _stable_series(f, i, l, max_coh):
    return tuple(presentation_series(ext_pair_stable(f, max_coh), i, l, max_coh))


def stable_series(f: StableFamily, i: int, l: int, max_coh: int) -> list[int]:
    """dim Ext^s_{P->F} at star indices (i, l) for s = 0..max_coh.

    Index 0 on both sides is the unit.
    """
    if max_coh < 0:
        raise InvalidParams("max_coh must be nonnegative")
    if i == 0 or l == 0:
        return [int(i == l)] + [0] * max_coh
    return list(_stable_series(f, i, l, max_coh))


def stable_coefficient(f: StableFamily, s: int, i: int, l: int) -> int:
    return stable_series(f, i, l, s)[s]


# ---- bounds -------------------------------------------------------------

def least_log(p: int, x: Fraction | int) -> int:
    """Least m >= 0 with p^m >= x."""
    m = 0
    while p ** m < x:
        m += 1
    return m


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def vanish_h(p: int, i: int, d: int) -> int:
    """Twist count beyond which the low Ext groups vanish."""
    return least_log(p, Fraction(i + 2, 2)) + _ceil_div(max(d - 1, 0), p - 1)


def weak_m0(p: int, s: int, d: int) -> int:
    return least_log(p, Fraction(s + 2, 2)) + _ceil_div(max(d - 1, 0), p - 1)


def weak_q(p: int, s: int, d: int) -> int:
    return d * p ** weak_m0(p, s, d)


def strong_m(p: int, s: int) -> int:
    """Least m >= 0 with p^m >= (s + 1)/2."""
    return least_log(p, Fraction(s + 1, 2))


def strong_q(d: int) -> int:
    return d


def gl_n(m: int, d: int) -> int:
    return 2 * m + 2 * d


@dataclass(frozen=True)
class BoundsReport:
    vanish_h: int
    weak_m0: int
    weak_q: int
    strong_m: int
    strong_q: int
    gl_n: int

    def as_dict(self):
        return asdict(self)


def bounds(p: int, s: int, d: int, m: int | None = None, i: int | None = None) -> BoundsReport:
    """All thresholds for coh degree s, polynomial degree d.

    ``i`` defaults to s for the vanishing bound and ``m`` to s for the
    general linear group bound.
    """
    check_prime(p)
    i = s if i is None else i
    m = s if m is None else m
    if min(s, d, m, i) < 0:
        raise InvalidParams("bound arguments must be nonnegative")
    return BoundsReport(
        vanish_h=vanish_h(p, i, d),
        weak_m0=weak_m0(p, s, d),
        weak_q=weak_q(p, s, d),
        strong_m=strong_m(p, s),
        strong_q=strong_q(d),
        gl_n=gl_n(m, d),
    )
