"""Ext in the ordinary functor category over the field with q = p^N elements.

Ext_F(A^{j(h)}, B^l) splits as a sum over the finite index set Pr^h(j, l)
of tensor products of stable Ext groups.  A sequence j_0..j_{n-1},
l_1..l_n belongs to the set when

    j = sum_s j_s + sum_t l_t p^{tN-h}
    l = sum_s j_s p^{sN+h} + sum_t l_t.

The j_s factor is stable Ext(A^{j_s(sN+h)}, B^{j_s p^{sN+h}}) and the l_t factor
is stable Ext(A^{l_t p^{tN-h}(h)}, B^{l_t(tN)}).
"""
from __future__ import annotations

from dataclasses import dataclass

from .basic_ext import check_prime
from .core import GeneratorSpec, HopfPresentation, Kind, Token, convolve_series
from .errors import InvalidParams, UnsupportedPair
from .pcalc import family_form, family_generator, normalize_kinds
from .stable import Direction, StableFamily, stable_series

G, L, S = Kind.GAMMA, Kind.LAMBDA, Kind.SYM
FAMILY_PAIRS = ((G, S), (G, L), (G, G), (L, L))


@dataclass(frozen=True)
class PrSequence:
    """Index sequence with trailing zeros stripped from both lists."""

    js: tuple[int, ...]
    ls: tuple[int, ...]

    @classmethod
    def make(cls, js, ls):
        js, ls = list(js), list(ls)
        while js and not js[-1]:
            js.pop()
        while ls and not ls[-1]:
            ls.pop()
        return cls(tuple(js), tuple(ls))


def _check(p, N, h):
    check_prime(p)
    if N < 1:
        raise InvalidParams("N must be at least 1")
    if not 0 <= h < N:
        raise InvalidParams(f"need 0 <= h < N, got h={h}, N={N}")


def stable_length(p: int, N: int, h: int, j: int, l: int) -> int:
    """Least n with p^{(n+1)N-h} > j and p^{nN+h} > l."""
    n = 0
    while not (p ** ((n + 1) * N - h) > j and p ** (n * N + h) > l):
        n += 1
    return n


def pr_enumerate_n(p: int, N: int, h: int, j: int, l: int, n: int) -> list[PrSequence]:
    """All sequences of length n (j_0..j_{n-1}, l_1..l_n) hitting (j, l)."""
    _check(p, N, h)
    if min(j, l, n) < 0:
        raise InvalidParams("indices must be nonnegative")
    # each variable adds (dj, dl) to the running totals
    steps = [(1, p ** (s * N + h)) for s in range(n)]
    steps += [(p ** (t * N - h), 1) for t in range(1, n + 1)]
    out = []

    def rec(k, rj, rl, chosen):
        if k == len(steps):
            if rj == 0 and rl == 0:
                out.append(PrSequence.make(chosen[:n], chosen[n:]))
            return
        dj, dl = steps[k]
        for c in range(min(rj // dj, rl // dl) + 1):
            chosen.append(c)
            rec(k + 1, rj - c * dj, rl - c * dl, chosen)
            chosen.pop()

    rec(0, j, l, [])
    return sorted(out, key=lambda s: (s.js, s.ls))


def pr_enumerate(p: int, N: int, h: int, j: int, l: int) -> list[PrSequence]:
    """The limit index set, using the stabilization length."""
    _check(p, N, h)
    return pr_enumerate_n(p, N, h, j, l, stable_length(p, N, h, j, l))


def _resolve_kinds(src_kind, tgt_kind):
    a, b = normalize_kinds(src_kind, tgt_kind)
    family_form(a, b, True)  # raises UnsupportedPair
    return a, b


def ext_F_series(p: int, N: int, h: int, src_kind: Kind, j: int, tgt_kind: Kind,
                 l: int, max_coh: int) -> list[int]:
    """dim Ext^s_F(A^{j(h)}, B^l) over F_{p^N} for s = 0..max_coh."""
    _check(p, N, h)
    if max_coh < 0:
        raise InvalidParams("max_coh must be nonnegative")
    a, b = _resolve_kinds(src_kind, tgt_kind)
    total = [0] * (max_coh + 1)
    for seq in pr_enumerate(p, N, h, j, l):
        acc = [1] + [0] * max_coh
        for s, js in enumerate(seq.js):
            if js:
                hs = s * N + h
                fam = StableFamily(p, a, b, hs, Direction.SOURCE_TWISTED)
                acc = convolve_series(acc, stable_series(fam, js, js * p ** hs, max_coh))
        for t, lt in enumerate(seq.ls, start=1):
            if lt:
                ht = t * N - h
                fam = StableFamily(p, a, b, ht, Direction.TARGET_TWISTED)
                acc = convolve_series(acc, stable_series(fam, lt * p ** ht, lt, max_coh))
        total = [x + y for x, y in zip(total, acc)]
    return total


def ext_F(p, N, h, src_kind, j, tgt_kind, l, s) -> int:
    if s < 0:
        raise InvalidParams("coh degree must be nonnegative")
    return ext_F_series(p, N, h, src_kind, j, tgt_kind, l, s)[s]


def ext_F_family(p: int, N: int, h: int, pair: tuple[Kind, Kind], max_coh: int,
                 max_index: int) -> HopfPresentation:
    """Closed-form generator list of Ext_F(A^{*(h)}, B^*) under explicit caps.

    Generators come in two series: for s >= 0 the source-twisted stable
    generators with twist sN + h, and for t >= 1 the target-twisted ones with
    twist tN - h.  Only generators with coh <= max_coh and both indices
    <= max_index are returned.
    """
    _check(p, N, h)
    pair = normalize_kinds(*pair)
    if pair not in FAMILY_PAIRS:
        raise UnsupportedPair(pair[0].name, pair[1].name,
                              "no closed-form generator list for this pair in F")
    gens: list[GeneratorSpec] = []
    family = None

    def series(twist, more):
        nonlocal family
        m = 0
        while 2 * m * p ** twist <= max_coh:
            e_tok = (Token("e()", m * p ** twist),) if m else ()
            family, g = family_generator(p, pair[0], pair[1], twist, m, more, e_tok,
                                         low_twist=0 if more else h)
            if g.degree.coh <= max_coh:
                gens.append(g)
            m += 1

    s = 0
    while p ** (s * N + h) <= max_index:
        series(s * N + h, True)
        s += 1
    t = 1
    while p ** (t * N - h) <= max_index:
        series(t * N - h, False)
        t += 1
    if family is None:
        family = family_form(pair[0], pair[1], True)[0]
    return HopfPresentation(family, tuple(sorted(gens, key=lambda g: g.degree.as_tuple())))


def reduce_twists(N: int, src_twist: int, tgt_twist: int) -> int:
    """Relative twist h in [0, N) equivalent to the given pair of twists."""
    if N < 1:
        raise InvalidParams("N must be at least 1")
    return (src_twist - tgt_twist) % N


def congruence_gate(q: int, deg_src: int, deg_tgt: int) -> bool:
    """False exactly when the degrees force every Ext_F group to vanish."""
    if q < 2:
        raise InvalidParams("q must be at least 2")
    return (deg_src - deg_tgt) % (q - 1) == 0


def strong_comparison_applies(q: int, d: int) -> bool:
    """Whether Ext_F equals stable Ext for degree-d functors."""
    return q >= d


def gauss_binom(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise InvalidParams("need 0 <= k <= n")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count_table(q: int, n_max: int) -> list[list[int]]:
    return [[gauss_binom(n, k, q) for k in range(n + 1)] for n in range(n_max + 1)]


def a_dim(dims_of_b: list[int], q: int, n: int) -> int:
    """dim of the sum over subspaces W of F_q^n of B(F_q^n / W)."""
    if len(dims_of_b) <= n:
        raise InvalidParams("dims_of_b must have entries 0..n")
    return sum(gauss_binom(n, k, q) * dims_of_b[n - k] for k in range(n + 1))
