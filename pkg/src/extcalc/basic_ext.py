"""Closed-form tables of the basic graded Ext spaces.

For twists 0 <= j <= r the space V_{r,j} = Ext(I^(r), S^{p^{r-j}(j)}) has one
basis vector in each degree 2 p^{r-j} m, 0 <= m < p^j.  The spaces W, U and
Vtilde are copies of V shifted upward, and K, C are the kernel and cokernel
of the differential from W_j to V_j.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import GeneratorWord, GradedDims, Token
from .errors import InvalidParams

KINDS = ("V", "W", "U", "Vtilde", "K", "C")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidParams(f"p must be prime, got {p!r}")


@dataclass(frozen=True)
class BasicSpaceQuery:
    kind: str
    p: int
    r: int
    j: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParams(f"unknown basic space {self.kind!r}")
        check_prime(self.p)
        if not 0 <= self.j <= self.r:
            raise InvalidParams(f"need 0 <= j <= r, got j={self.j}, r={self.r}")
        if self.kind in ("K", "C") and self.j < 1:
            raise InvalidParams(f"{self.kind} needs j >= 1")


def _v_degrees(p, r, j):
    step = 2 * p ** (r - j)
    return [step * m for m in range(p ** j)]


def basic_space(q: BasicSpaceQuery) -> GradedDims:
    p, r, j = q.p, q.r, q.j
    if q.kind in ("V", "U"):
        return GradedDims.from_degrees(_v_degrees(p, r, j))
    if q.kind == "W":
        return GradedDims.from_degrees(_v_degrees(p, r, j)).shift(p ** (r - j) - 1)
    if q.kind == "Vtilde":
        return GradedDims.from_degrees(_v_degrees(p, r, j)).shift(2 * p ** (r - j) - 2)
    if q.kind == "K":
        # the W_j slots with m = p-1 mod p; same as W_{j-1} moved up
        w_prev = basic_space(BasicSpaceQuery("W", p, r, j - 1))
        return w_prev.shift(p ** (r - j + 1) - p ** (r - j))
    return basic_space(BasicSpaceQuery("V", p, r, j - 1))


def boundary_shift(p: int, r: int, j: int) -> int:
    """Degree shift of the differential W_j -> V_j."""
    return p ** (r - j) + 1


def p_digits(m: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        m, dgt = divmod(m, p)
        out.append(dgt)
    return out


def e_name(p: int, r: int, m: int) -> GeneratorWord:
    """Basis word of Ext^{2m}(I^(r), I^(r)) built from the p-adic digits of m.

    Digit m_i becomes e_{i+1}^{m_i} twisted by r-i-1.  Zero digits are
    omitted, so m = 0 is the empty word.
    """
    check_prime(p)
    if r < 1:
        raise InvalidParams("r must be positive")
    if not 0 <= m < p ** r:
        raise InvalidParams(f"m={m} outside [0, {p ** r})")
    tokens = tuple(Token("e", i + 1, r - i - 1, dgt)
                   for i, dgt in enumerate(p_digits(m, p, r)) if dgt)
    return GeneratorWord(tokens, 2 * m)
