"""Dimension identities verified on explicit complexes."""
from __future__ import annotations

from math import comb

import numpy as np

from ..core import GradedDims, graded_convolve, power_dims
from ..errors import InvalidParams
from ..pcalc import splitting_criterion
from .bases import expected_size, functor_basis, sym_comultiply, sym_multiply
from .complexes import GradedLinearMap, derham, gen_koszul, graded_homology
from .linalg import FpMatrix


def kernel_cokernel_dims(f: GradedLinearMap) -> tuple[GradedDims, GradedDims]:
    """Graded dims of ker f (in W's grading) and coker f (in V's grading)."""
    ranks = f.block_ranks()
    ker = {n: f.source_degrees.count(n) - ranks.get(n, 0) for n in set(f.source_degrees)}
    coker = {n: f.target_degrees.count(n) - ranks.get(n - f.shift, 0)
             for n in set(f.target_degrees)}
    return GradedDims(ker), GradedDims(coker)


def lemma43_tables(f: GradedLinearMap, d: int):
    """(computed, predicted) homology tables of Q_d(f).

    Both are lists indexed like the complex terms (i = d, ..., 0) of graded
    dims in the internal degree.
    """
    c = gen_koszul(f, d)
    computed = graded_homology(c, f.shift)
    ker, coker = kernel_cokernel_dims(f)
    predicted = [graded_convolve(power_dims(coker, d - i, "sym"), power_dims(ker, i, "ext"))
                 for i in range(d, -1, -1)]
    return computed, predicted


def lemma43_check(f: GradedLinearMap, d: int, p: int | None = None) -> bool:
    """Homology of Q_e(f) equals S(coker f) (x) Lambda(ker f) for all e <= d."""
    if p is not None and p != f.p:
        raise InvalidParams("p does not match the map's field")
    for e in range(d + 1):
        computed, predicted = lemma43_tables(f, e)
        if computed != predicted:
            return False
    return True


def cartier_expected(p: int, n: int, D: int) -> list[int]:
    """Homology dims of the weight-D de Rham complex on F_p^n."""
    if D % p:
        return [0] * (D + 1)
    m = D // p
    return [expected_size("sym", n, m - i) * expected_size("ext", n, i) if i <= m else 0
            for i in range(D + 1)]


def cartier_check(p: int, n: int, D: int) -> bool:
    from .complexes import homology_dims
    return homology_dims(derham(p, n, D)) == cartier_expected(p, n, D)


def mult_comult_matrix(p: int, n: int, m: int) -> FpMatrix:
    """mult o comult on S^n(F_p^2) through S^m (x) S^{n-m}."""
    basis = functor_basis("sym", 2, n, p).monomials
    idx = {b: k for k, b in enumerate(basis)}
    mat = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, b in enumerate(basis):
        for c, left, right in sym_comultiply(b, m):
            c2, prod = sym_multiply(left, right)
            mat[idx[prod], col] += c * c2
    return FpMatrix(mat, p)


def lemma22_split_check(p: int, n: int, m: int) -> bool:
    """mult o comult is the scalar C(n, m), and it is invertible iff the
    p-adic digit criterion says S^n splits off S^m (x) S^{n-m}."""
    if not 0 <= m <= n:
        raise InvalidParams("need 0 <= m <= n")
    mat = mult_comult_matrix(p, n, m)
    scalar = comb(n, m) % p
    ident = FpMatrix(scalar * np.eye(mat.rows, dtype=np.int64), p)
    invertible = mat.rank() == mat.rows
    return mat == ident and invertible == splitting_criterion(p, n, m)
