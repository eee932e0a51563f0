"""Monomial bases of S^d, Lambda^d and Gamma^d on F_p^n and their structure maps.

Symmetric and divided powers use exponent vectors summing to d; exterior
powers use strictly increasing index tuples.  Both are listed in descending
lexicographic order of exponent vectors, so x^2, xy, y^2 for S^2 of F^2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from ..errors import InvalidParams

FLAVORS = ("sym", "ext", "gamma")


def exponent_vectors(n: int, d: int):
    """Nonnegative integer vectors of length n summing to d, descending lex."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in exponent_vectors(n - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialBasis:
    flavor: str
    n: int
    d: int
    p: int
    monomials: tuple

    def __len__(self):
        return len(self.monomials)

    def index(self):
        return {m: k for k, m in enumerate(self.monomials)}


def functor_basis(flavor: str, n: int, d: int, p: int) -> MonomialBasis:
    if flavor not in FLAVORS:
        raise InvalidParams(f"unknown flavor {flavor!r}")
    if n < 0 or d < 0:
        raise InvalidParams("n and d must be nonnegative")
    if flavor == "ext":
        monos = tuple(itertools.combinations(range(n), d))
    else:
        monos = tuple(exponent_vectors(n, d))
    return MonomialBasis(flavor, n, d, p, monos)


def expected_size(flavor: str, n: int, d: int) -> int:
    if flavor == "ext":
        return comb(n, d)
    return comb(n + d - 1, d) if n else int(d == 0)


def wedge_insert(i: int, wedge: tuple[int, ...]):
    """e_i ^ wedge as (sign, sorted tuple), or None when i already occurs."""
    if i in wedge:
        return None
    pos = sum(1 for x in wedge if x < i)
    return (-1) ** pos, tuple(sorted(wedge + (i,)))


def sym_multiply(a: tuple[int, ...], b: tuple[int, ...]):
    """Product of two symmetric monomials: (coefficient, monomial)."""
    return 1, tuple(x + y for x, y in zip(a, b))


def gamma_multiply(a: tuple[int, ...], b: tuple[int, ...]):
    """gamma_a(x) gamma_b(x) = C(a+b, a) gamma_{a+b}(x), per variable."""
    c = 1
    for x, y in zip(a, b):
        c *= comb(x + y, x)
    return c, tuple(x + y for x, y in zip(a, b))


def sym_comultiply(a: tuple[int, ...], m: int):
    """Image of x^a in S^m (x) S^{|a|-m}: yields (coef, left, right)."""
    for left in itertools.product(*(range(x + 1) for x in a)):
        if sum(left) != m:
            continue
        c = 1
        for x, y in zip(a, left):
            c *= comb(x, y)
        yield c, tuple(left), tuple(x - y for x, y in zip(a, left))


def gamma_comultiply(a: tuple[int, ...], m: int):
    """Divided powers split exponents with coefficient 1."""
    for left in itertools.product(*(range(x + 1) for x in a)):
        if sum(left) == m:
            yield 1, tuple(left), tuple(x - y for x, y in zip(a, left))
