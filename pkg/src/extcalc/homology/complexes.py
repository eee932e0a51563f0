"""Explicit cochain complexes over F_p and their homology."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import GradedDims
from ..errors import InvalidParams
from .bases import functor_basis, wedge_insert
from .linalg import FpMatrix


@dataclass(frozen=True)
class Term:
    """A based vector space; ``degrees`` is the internal degree of each vector."""

    label: str
    basis: tuple
    degrees: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class ChainComplexFp:
    """Terms C_0 -> C_1 -> ... with differentials[k]: terms[k] -> terms[k+1]."""

    p: int
    terms: list[Term]
    differentials: list[FpMatrix]
    kind: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise InvalidParams("need one differential per adjacent pair of terms")
        for k, d in enumerate(self.differentials):
            if (d.rows, d.cols) != (self.terms[k + 1].dim, self.terms[k].dim):
                raise InvalidParams(f"differential {k} has the wrong shape")
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero():
                raise InvalidParams(f"d o d is nonzero at position {k}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))

    def dump_text(self) -> str:
        """All differentials in the plain ``rows cols`` matrix format."""
        return "\n".join(d.to_text() for d in self.differentials) + "\n"


def homology_dims(c: ChainComplexFp) -> list[int]:
    ranks = [d.rank() for d in c.differentials]
    out = []
    for k, t in enumerate(c.terms):
        outgoing = ranks[k] if k < len(ranks) else 0
        incoming = ranks[k - 1] if k > 0 else 0
        out.append(t.dim - outgoing - incoming)
    return out


def _matrix(p, src: Term, tgt: Term, image) -> FpMatrix:
    """Assemble a matrix column by column; image(b) yields (coef, target)."""
    idx = {b: k for k, b in enumerate(tgt.basis)}
    m = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for col, b in enumerate(src.basis):
        for coef, target in image(b):
            m[idx[target], col] += coef
    return FpMatrix(m, p)


def _tensor_term(label, left, right):
    return Term(label, tuple((a, b) for a in left.monomials for b in right.monomials))


def _check_sizes(p, n, D):
    if min(n, D) < 0:
        raise InvalidParams("n and D must be nonnegative")


def koszul(p: int, n: int, D: int) -> ChainComplexFp:
    """Lambda^{D-i} (x) S^i on F_p^n, contracting one wedge factor into S."""
    _check_sizes(p, n, D)
    terms = [_tensor_term(f"L{D - i}*S{i}", functor_basis("ext", n, D - i, p),
                          functor_basis("sym", n, i, p)) for i in range(D + 1)]

    def image(b):
        w, f = b
        for k, x in enumerate(w):
            g = list(f)
            g[x] += 1
            yield (-1) ** k, (w[:k] + w[k + 1:], tuple(g))

    diffs = [_matrix(p, terms[i], terms[i + 1], image) for i in range(D)]
    return ChainComplexFp(p, terms, diffs, "koszul", {"n": n, "D": D})


def dual_koszul(p: int, n: int, D: int) -> ChainComplexFp:
    """Gamma^{D-i} (x) Lambda^i, gamma_a (x) w -> sum gamma_{a-e_i} (x) e_i ^ w."""
    _check_sizes(p, n, D)
    terms = [_tensor_term(f"G{D - i}*L{i}", functor_basis("gamma", n, D - i, p),
                          functor_basis("ext", n, i, p)) for i in range(D + 1)]

    def image(b):
        a, w = b
        for i, x in enumerate(a):
            if x:
                ins = wedge_insert(i, w)
                if ins:
                    sign, w2 = ins
                    a2 = a[:i] + (x - 1,) + a[i + 1:]
                    yield sign, (a2, w2)

    diffs = [_matrix(p, terms[i], terms[i + 1], image) for i in range(D)]
    return ChainComplexFp(p, terms, diffs, "dual_koszul", {"n": n, "D": D})


def derham(p: int, n: int, D: int) -> ChainComplexFp:
    """S^{D-i} (x) Lambda^i with the derivation f -> sum df/dx_i dx_i."""
    _check_sizes(p, n, D)
    terms = [_tensor_term(f"S{D - i}*L{i}", functor_basis("sym", n, D - i, p),
                          functor_basis("ext", n, i, p)) for i in range(D + 1)]

    def image(b):
        a, w = b
        for i, x in enumerate(a):
            if x % p:
                ins = wedge_insert(i, w)
                if ins:
                    sign, w2 = ins
                    yield sign * x, (a[:i] + (x - 1,) + a[i + 1:], w2)

    diffs = [_matrix(p, terms[i], terms[i + 1], image) for i in range(D)]
    return ChainComplexFp(p, terms, diffs, "derham", {"n": n, "D": D})


@dataclass(frozen=True)
class GradedLinearMap:
    """Degree-``shift`` map from W to V given blockwise per source degree.

    Basis slots are the entries of ``source_degrees`` / ``target_degrees`` in
    order; ``blocks[n]`` maps the W slots of degree n to the V slots of
    degree n + shift, both taken in slot order.
    """

    p: int
    source_degrees: tuple[int, ...]
    target_degrees: tuple[int, ...]
    shift: int
    blocks: dict

    def __post_init__(self):
        for n, blk in self.blocks.items():
            want = (self.target_degrees.count(n + self.shift), self.source_degrees.count(n))
            if np.shape(blk) != want:
                raise InvalidParams(f"block at degree {n} should have shape {want}")

    @property
    def source(self) -> GradedDims:
        return GradedDims.from_degrees(self.source_degrees)

    @property
    def target(self) -> GradedDims:
        return GradedDims.from_degrees(self.target_degrees)

    def matrix(self) -> np.ndarray:
        m = np.zeros((len(self.target_degrees), len(self.source_degrees)), dtype=np.int64)
        for n, blk in self.blocks.items():
            rows = [k for k, x in enumerate(self.target_degrees) if x == n + self.shift]
            cols = [k for k, x in enumerate(self.source_degrees) if x == n]
            if rows and cols:
                m[np.ix_(rows, cols)] = np.asarray(blk, dtype=np.int64) % self.p
        return m

    def block_ranks(self) -> dict[int, int]:
        return {n: FpMatrix(blk, self.p).rank() if np.size(blk) else 0
                for n, blk in self.blocks.items()}

    @classmethod
    def from_matrix(cls, p, source_degrees, target_degrees, shift, matrix):
        m = np.asarray(matrix, dtype=np.int64)
        blocks = {}
        for n in sorted(set(source_degrees)):
            rows = [k for k, x in enumerate(target_degrees) if x == n + shift]
            cols = [k for k, x in enumerate(source_degrees) if x == n]
            blocks[n] = m[np.ix_(rows, cols)] if rows else np.zeros((0, len(cols)), np.int64)
        return cls(p, tuple(source_degrees), tuple(target_degrees), shift, blocks)

    @classmethod
    def random(cls, p, rng: np.random.Generator, max_slots=4, max_degree=3, max_shift=2):
        src = tuple(sorted(int(x) for x in rng.integers(0, max_degree + 1,
                                                        rng.integers(1, max_slots + 1))))
        shift = int(rng.integers(0, max_shift + 1))
        tgt = tuple(sorted(int(x) for x in rng.integers(shift, shift + max_degree + 1,
                                                        rng.integers(1, max_slots + 1))))
        blocks = {}
        for n in sorted(set(src)):
            shape = (tgt.count(n + shift), src.count(n))
            blocks[n] = rng.integers(0, p, size=shape)
        return cls(p, src, tgt, shift, blocks)


def gen_koszul(f: GradedLinearMap, d: int) -> ChainComplexFp:
    """Terms S^{d-i}(V) (x) Lambda^i(W) for i = d, d-1, ..., 0.

    The differential lowers i by one:
    v (x) w_1^...^w_i -> sum_k (-1)^(k-1) v f(w_k) (x) w_1^..^w_k-hat^..^w_i.
    Internal degrees are raw sums of slot degrees, so the differential
    raises them by ``f.shift``.
    """
    if d < 0:
        raise InvalidParams("d must be nonnegative")
    p = f.p
    nv, nw = len(f.target_degrees), len(f.source_degrees)
    fm = f.matrix()
    terms = []
    for i in range(d, -1, -1):
        sym = functor_basis("sym", nv, d - i, p).monomials
        ext = functor_basis("ext", nw, i, p).monomials
        basis = tuple((a, w) for a in sym for w in ext)
        degs = tuple(sum(x * y for x, y in zip(a, f.target_degrees))
                     + sum(f.source_degrees[k] for k in w) for a, w in basis)
        terms.append(Term(f"S{d - i}(V)*L{i}(W)", basis, degs))

    def image(b):
        a, w = b
        for k, x in enumerate(w):
            rest = w[:k] + w[k + 1:]
            for u in range(nv):
                c = int(fm[u, x])
                if c:
                    a2 = a[:u] + (a[u] + 1,) + a[u + 1:]
                    yield (-1) ** k * c, (a2, rest)

    diffs = [_matrix(p, terms[k], terms[k + 1], image) for k in range(d)]
    return ChainComplexFp(p, terms, diffs, "gen_koszul", {"d": d, "shift": f.shift})


def graded_homology(c: ChainComplexFp, shift: int) -> list[GradedDims]:
    """Homology of each term split by internal degree.

    ``shift`` is the internal-degree change of every differential.
    """
    out = []
    for k, t in enumerate(c.terms):
        res = {}
        for n in sorted(set(t.degrees)):
            cols = [x for x, deg in enumerate(t.degrees) if deg == n]
            ker = len(cols)
            if k < len(c.differentials):
                ker -= c.differentials[k].submatrix(range(c.differentials[k].rows), cols).rank()
            im = 0
            if k > 0:
                prev = c.terms[k - 1]
                pcols = [x for x, deg in enumerate(prev.degrees) if deg == n - shift]
                if pcols:
                    im = c.differentials[k - 1].submatrix(range(t.dim), pcols).rank()
            res[n] = ker - im
        out.append(GradedDims(res))
    return out


BUILDERS = {"koszul": koszul, "dual_koszul": dual_koszul, "derham": derham}


def build_complex(kind: str, *args, **kwargs) -> ChainComplexFp:
    if kind == "gen_koszul":
        return gen_koszul(*args, **kwargs)
    if kind not in BUILDERS:
        raise InvalidParams(f"unknown complex {kind!r}")
    return BUILDERS[kind](*args, **kwargs)
