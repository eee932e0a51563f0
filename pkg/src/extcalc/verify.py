"""Verification suites run by ``extcalc verify``.

Each suite returns a SuiteResult; a suite passes when every check in its
grid passes.  ``limit`` scales the main grid parameter of a suite and
defaults to the documented acceptance grid.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

import numpy as np

from .basic_ext import BasicSpaceQuery, basic_space
from .core import graded_convolve, power_dims
from .fcat import FAMILY_PAIRS, ext_F_family, ext_F_series
from .homology import (
    GradedLinearMap,
    cartier_expected,
    derham,
    dual_koszul,
    homology_dims,
    koszul,
    lemma43_check,
)
from .pcalc import ExtQuery, FunctorWord, dualize, ext_word_series, supported_atom_pairs


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checks: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 20:
                self.failures.append(what)

    def as_dict(self):
        return asdict(self)


def suite_koszul(limit=None) -> SuiteResult:
    res = SuiteResult("koszul")
    for p, n, D in itertools.product((2, 3), range(1, 4), range(1, (limit or 6) + 1)):
        for build in (koszul, dual_koszul):
            h = homology_dims(build(p, n, D))
            res.record(not any(h), f"{build.__name__} p={p} n={n} D={D}: {h}")
    return res


def suite_derham(limit=None) -> SuiteResult:
    res = SuiteResult("derham")
    for p, n, D in itertools.product((2, 3), range(1, 4), range(1, (limit or 6) + 1)):
        h = homology_dims(derham(p, n, D))
        res.record(h == cartier_expected(p, n, D), f"derham p={p} n={n} D={D}: {h}")
    return res


def suite_genkoszul(limit=None, seed=20240601) -> SuiteResult:
    res = SuiteResult("genkoszul")
    rng = np.random.default_rng(seed)
    for k in range(limit or 20):
        p = (2, 3)[k % 2]
        f = GradedLinearMap.random(p, rng)
        res.record(lemma43_check(f, 3), f"random map #{k} over F_{p}")
    return res


def cor47_sides(p, r, j, d, n):
    """Both sides of the degree-n identity relating the four basic spaces."""
    V = basic_space(BasicSpaceQuery("V", p, r, j - 1))
    W = basic_space(BasicSpaceQuery("W", p, r, j - 1))
    C = basic_space(BasicSpaceQuery("C", p, r, j))
    K = basic_space(BasicSpaceQuery("K", p, r, j))
    lhs = sum(graded_convolve(power_dims(V, d - s, "sym"), power_dims(W, s, "ext"))
              [n - s * p ** (r - j + 1)] for s in range(d + 1))
    rhs = sum(graded_convolve(power_dims(C, d - s, "sym"), power_dims(K, s, "ext"))
              [n - s * p ** (r - j)] for s in range(d + 1))
    return lhs, rhs


def suite_cor47(limit=None) -> SuiteResult:
    res = SuiteResult("cor47")
    for p, r in itertools.product((2, 3), range(1, 4)):
        for j, d in itertools.product(range(1, r + 1), range(5)):
            for n in range((limit or 40) + 1):
                lhs, rhs = cor47_sides(p, r, j, d, n)
                res.record(lhs == rhs, f"p={p} r={r} j={j} d={d} n={n}: {lhs} != {rhs}")
    return res


def suite_duality(limit=None) -> SuiteResult:
    res = SuiteResult("duality")
    max_coh = limit or 30
    for p in (2, 3):
        for a, b in supported_atom_pairs(p, 2, 4):
            q = ExtQuery("P", p, FunctorWord([a]), FunctorWord([b]))
            dq = dualize(q)
            ok = (ext_word_series(p, q.source, q.target, max_coh)
                  == ext_word_series(p, dq.source, dq.target, max_coh))
            res.record(ok, f"p={p} {a.render()} -> {b.render()}")
    return res


def suite_family_vs_assembly(limit=None) -> SuiteResult:
    res = SuiteResult("family-vs-assembly")
    max_idx, max_coh = limit or 6, 20
    for N in (1, 2):
        for h, pair in itertools.product(range(N), FAMILY_PAIRS):
            pres = ext_F_family(2, N, h, pair, max_coh, max_idx)
            for j, l in itertools.product(range(max_idx + 1), repeat=2):
                ok = (pres.series(j, l, max_coh)
                      == ext_F_series(2, N, h, pair[0], j, pair[1], l, max_coh))
                res.record(ok, f"N={N} h={h} {pair[0].value},{pair[1].value} j={j} l={l}")
    return res


SUITES = {
    "koszul": suite_koszul,
    "derham": suite_derham,
    "genkoszul": suite_genkoszul,
    "cor47": suite_cor47,
    "duality": suite_duality,
    "family-vs-assembly": suite_family_vs_assembly,
}


def run_suites(name: str, limit=None) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[n](limit) for n in names]

