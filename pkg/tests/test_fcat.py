import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extcalc.core import Kind
from extcalc.errors import InvalidParams, UnsupportedPair
from extcalc.fcat import (
    FAMILY_PAIRS,
    PrSequence,
    a_dim,
    congruence_gate,
    ext_F,
    ext_F_family,
    ext_F_series,
    gauss_binom,
    pr_enumerate,
    pr_enumerate_n,
    reduce_twists,
    stable_length,
    strong_comparison_applies,
    subspace_count_table,
)
from extcalc.pcalc import SUPPORTED_PAIRS
from extcalc.stable import Direction, StableFamily, stable_series

G, L, S, I = Kind.GAMMA, Kind.LAMBDA, Kind.SYM, Kind.ID


def brute_pr(p, N, h, j, l, n):
    """Try every vector with entries up to max(j, l)."""
    found = set()
    for vals in itertools.product(range(max(j, l) + 1), repeat=2 * n):
        js, ls = vals[:n], vals[n:]
        jj = sum(js) + sum(x * p ** ((t + 1) * N - h) for t, x in enumerate(ls))
        ll = sum(x * p ** (s * N + h) for s, x in enumerate(js)) + sum(ls)
        if (jj, ll) == (j, l):
            found.add(PrSequence.make(js, ls))
    return found


def test_pr_examples():
    assert pr_enumerate(2, 1, 0, 1, 1) == [PrSequence((1,), ())]
    assert pr_enumerate(2, 1, 0, 2, 1) == [PrSequence((), (1,))]
    assert pr_enumerate(2, 2, 1, 2, 1) == [PrSequence((), (1,))]
    for p, N in ((2, 1), (3, 2)):
        for h in range(N):
            assert pr_enumerate(p, N, h, 0, 0) == [PrSequence((), ())]
    with pytest.raises(InvalidParams):
        pr_enumerate(2, 2, 2, 1, 1)


@pytest.mark.parametrize("p,N", [(2, 1), (2, 2), (3, 1)])
def test_pr_matches_brute_force(p, N):
    for h, j, l in itertools.product(range(N), range(5), range(5)):
        n = stable_length(p, N, h, j, l)
        assert set(pr_enumerate(p, N, h, j, l)) == brute_pr(p, N, h, j, l, n)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.data())
def test_pr_longer_sequences_add_nothing(p, N, data):
    h = data.draw(st.integers(0, N - 1))
    j, l = data.draw(st.integers(0, 12)), data.draw(st.integers(0, 12))
    base = pr_enumerate(p, N, h, j, l)
    n = stable_length(p, N, h, j, l)
    for extra in (1, 2):
        assert pr_enumerate_n(p, N, h, j, l, n + extra) == base


def test_ext_F_examples():
    for p in (2, 3):
        series = ext_F_series(p, 1, 0, I, 1, I, 1, 30)
        assert series == [int(s % 2 == 0) for s in range(31)]
    series = ext_F_series(2, 1, 0, G, 2, S, 1, 24)
    assert series == [int(s % 4 == 0) for s in range(25)]
    # only the l_1 = 1 sequence contributes: Ext(G^{2(1)}, S^{1(2)}), relative twist 1
    fam = StableFamily(2, G, S, 1, Direction.TARGET_TWISTED)
    assert pr_enumerate(2, 2, 1, 2, 1) == [PrSequence((), (1,))]
    assert ext_F_series(2, 2, 1, G, 2, S, 1, 20) == stable_series(fam, 2, 1, 20)
    assert ext_F(2, 1, 0, G, 1, S, 1, 4) == 1


def test_ext_F_errors():
    with pytest.raises(UnsupportedPair):
        ext_F_series(2, 1, 0, L, 1, G, 1, 4)
    with pytest.raises(InvalidParams):
        ext_F_series(2, 1, 1, G, 1, S, 1, 4)


def test_family_example():
    pres = ext_F_family(2, 1, 0, (G, S), 4, 4)
    degs = {g.degree.as_tuple() for g in pres.generators}
    assert degs == {(0, 1, 1), (2, 1, 1), (4, 1, 1), (0, 1, 2), (4, 1, 2), (0, 1, 4),
                    (0, 2, 1), (4, 2, 1), (0, 4, 1)}
    assert len(pres.generators) == 9
    wide = ext_F_family(2, 1, 0, (G, S), 12, 4)
    assert wide.series(1, 1, 12) == [int(s % 2 == 0) for s in range(13)]
    with pytest.raises(UnsupportedPair):
        ext_F_family(2, 1, 0, (L, G), 4, 4)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_family_matches_assembly(N):
    for h, pair in itertools.product(range(N), FAMILY_PAIRS):
        pres = ext_F_family(3, N, h, pair, 16, 5)
        for j, l in itertools.product(range(6), repeat=2):
            assert pres.series(j, l, 16) == ext_F_series(3, N, h, pair[0], j, pair[1], l, 16)


def test_gates():
    assert congruence_gate(4, 2, 5)  # 5 - 2 = 3 = q - 1
    assert not congruence_gate(4, 2, 4)
    assert congruence_gate(2, 3, 8)
    assert congruence_gate(5, 3, 11)
    assert strong_comparison_applies(4, 4) and not strong_comparison_applies(4, 5)


def test_vanishing_gate():
    rng = random.Random(3)
    checked = 0
    while checked < 40:
        p, N = rng.choice([(2, 2), (3, 1), (2, 3), (3, 2)])
        h = rng.randrange(N)
        a, b = rng.choice(SUPPORTED_PAIRS)
        j, l = rng.randrange(1, 9), rng.randrange(1, 9)
        if congruence_gate(p ** N, j * p ** h, l):
            continue
        assert not any(ext_F_series(p, N, h, a, j, b, l, 30))
        checked += 1


@pytest.mark.parametrize("N", [2, 3, 4])
def test_field_size_invariance(N):
    # degrees below q: the answer equals stable Ext and does not change with N
    p = 2
    for h in range(N):
        for a, b in SUPPORTED_PAIRS:
            for j in range(1, 4):
                for l in range(1, 4):
                    if j * p ** h > 3:
                        continue
                    small = ext_F_series(p, N, h, a, j, b, l, 10)
                    assert small == ext_F_series(p, 2 * N, h, a, j, b, l, 10)
                    if j * p ** h == l:
                        fam = StableFamily(p, a, b, h, Direction.SOURCE_TWISTED)
                        assert small == stable_series(fam, j, l, 10)
                    else:
                        assert not any(small)


def test_reduce_twists():
    assert reduce_twists(2, 3, 0) == 1
    assert reduce_twists(3, 0, 1) == 2
    assert reduce_twists(1, 5, 2) == 0


def brute_subspaces(n, k, q):
    """Distinct spans of k-tuples of vectors in F_q^n with dimension k (q prime)."""
    vecs = list(itertools.product(range(q), repeat=n))
    spans = set()
    for basis in itertools.combinations(vecs, k):
        span = {tuple(sum(c * v[i] for c, v in zip(coefs, basis)) % q for i in range(n))
                for coefs in itertools.product(range(q), repeat=k)}
        if len(span) == q ** k:
            spans.add(frozenset(span))
    return len(spans)


def test_gauss_binom_examples():
    assert gauss_binom(2, 1, 2) == 3
    assert gauss_binom(5, 0, 7) == 1
    assert gauss_binom(4, 2, 2) == 35


@pytest.mark.parametrize("q,n_max", [(2, 4), (3, 3)])
def test_gauss_binom_counts_subspaces(q, n_max):
    table = subspace_count_table(q, n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            assert table[n][k] == brute_subspaces(n, k, q)
            assert table[n][k] == table[n][n - k]


def test_a_dim():
    assert a_dim([0, 1, 2, 3], 2, 2) == 5
    assert a_dim([1, 1, 1], 2, 2) == 5
    assert a_dim([7], 3, 0) == 7
    # B = I over F_2^3: sum over subspaces W of dim(V/W)
    total = sum(brute_subspaces(3, k, 2) * (3 - k) for k in range(4))
    assert a_dim([0, 1, 2, 3], 2, 3) == total
    with pytest.raises(InvalidParams):
        a_dim([1, 1], 2, 3)
