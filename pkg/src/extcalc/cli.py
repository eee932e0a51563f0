"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite fails, 2 for an
unsupported functor pair, 3 for parse or parameter errors.  JSON output is
canonical (sorted keys, integers only), so re-emitting a parsed document
reproduces it byte for byte.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .basic_ext import check_prime
from .core import Kind
from .errors import InvalidParams, UnsupportedPair
from .expr import ExprError, latex_word, parse_atom, parse_word
from .fcat import FAMILY_PAIRS, ext_F_family, ext_F_series, reduce_twists
from .pcalc import FunctorAtom, ext_pair_P, ext_word_series
from .stable import Direction, StableFamily, bounds, ext_pair_stable, stable_series
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED, EXIT_PARAMS = 0, 1, 2, 3
CONFIG_ENV = "EXTCALC_CONFIG"
CONFIG_KEYS = {"p": int, "N": int, "max_coh": int, "max_index": int, "format": str}


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def load_config(path: str | None) -> dict:
    """Read ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from None
    out = {}
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (x.strip() for x in line.partition("="))
        if not sep or key not in CONFIG_KEYS:
            raise CliError(f"{path}:{no}: expected one of {sorted(CONFIG_KEYS)} = value")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise CliError(f"{path}:{no}: bad value for {key}") from None
    return out


def build_parser(defaults: dict) -> argparse.ArgumentParser:
    ap = _Parser(prog="extcalc", description="Ext groups between classical functors.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--category", choices=["P", "stable", "F"], required=True)
        sp.add_argument("--p", type=int, default=defaults.get("p"))
        sp.add_argument("--N", type=int, default=defaults.get("N"))
        sp.add_argument("--max-coh", type=int, default=defaults.get("max_coh", 20))
        sp.add_argument("--format", choices=["json", "table", "latex"],
                        default=defaults.get("format", "json"))

    ext = sub.add_parser("ext", help="dimensions of Ext groups")
    common(ext)
    ext.add_argument("--source", required=True)
    ext.add_argument("--target", required=True)

    gen = sub.add_parser("generators", help="generator list of a family")
    common(gen)
    gen.add_argument("--pair", required=True, help="two letters, e.g. G,S")
    gen.add_argument("--src-twist", type=int, default=0)
    gen.add_argument("--tgt-twist", type=int, default=0)
    gen.add_argument("--max-index", type=int, default=defaults.get("max_index", 8))

    bd = sub.add_parser("bounds", help="stability and comparison thresholds")
    bd.add_argument("--p", type=int, default=defaults.get("p"))
    bd.add_argument("--s", type=int, required=True)
    bd.add_argument("--d", type=int, required=True)
    bd.add_argument("--m", type=int)
    bd.add_argument("--i", type=int)
    bd.add_argument("--format", choices=["json", "table", "latex"],
                    default=defaults.get("format", "json"))

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    ver.add_argument("--max", type=int, dest="limit")
    ver.add_argument("--format", choices=["json", "table", "latex"],
                     default=defaults.get("format", "json"))
    return ap


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise InvalidParams(f"--{name} is required (flag or config file)")
    return value


def _gen_entry(g, family):
    return {"word": g.render(), "degree": list(g.degree.as_tuple()),
            "family": family.value, "parity": g.parity}


def _rows(series, i, l):
    return [[s, i, l, d] for s, d in enumerate(series) if d]


def run_ext(args) -> dict:
    p = _need(args, "p")
    check_prime(p)
    if args.max_coh < 0:
        raise InvalidParams("--max-coh must be nonnegative")
    src, tgt = parse_word(args.source), parse_word(args.target)
    doc = {"command": "ext", "category": args.category, "p": p, "q": None,
           "query": {"source": src.render(), "target": tgt.render(),
                     "max_coh": args.max_coh},
           "generators": []}
    i = sum(a.star for a in src.factors)
    l = sum(a.star for a in tgt.factors)
    if args.category == "P":
        series = ext_word_series(p, src, tgt, args.max_coh)
        if len(src.factors) == 1 and len(tgt.factors) == 1:
            pres = ext_pair_P(p, src.factors[0], tgt.factors[0])
            doc["generators"] = [_gen_entry(g, pres.family) for g in pres.generators
                                 if g.degree.coh <= args.max_coh]
    else:
        a, b = parse_atom(args.source), parse_atom(args.target)
        if args.category == "stable":
            h = abs(a.twist - b.twist)
            direction = (Direction.SOURCE_TWISTED if a.twist > b.twist
                         else Direction.TARGET_TWISTED)
            fam = StableFamily(p, a.kind, b.kind, h, direction)
            pres = ext_pair_stable(fam, args.max_coh)
            series = stable_series(fam, a.star, b.star, args.max_coh)
            doc["query"]["relative_twist"] = h
        else:
            N = _need(args, "N")
            h = reduce_twists(N, a.twist, b.twist)
            series = ext_F_series(p, N, h, a.kind, a.star, b.kind, b.star, args.max_coh)
            doc["q"] = p ** N
            doc["query"].update(N=N, h=h)
            pres = None
            pair = (Kind.GAMMA if a.kind is Kind.ID else a.kind,
                    Kind.SYM if b.kind is Kind.ID else b.kind)
            if pair in FAMILY_PAIRS:
                pres = ext_F_family(p, N, h, pair, args.max_coh, max(a.star, b.star, 1))
        if pres is not None:
            doc["generators"] = [_gen_entry(g, pres.family) for g in pres.generators]
    doc["series"] = series
    doc["coefficients"] = _rows(series, i, l)
    doc["latex"] = {"source": latex_word(src), "target": latex_word(tgt)}
    return doc


def run_generators(args) -> dict:
    p = _need(args, "p")
    check_prime(p)
    try:
        ka, kb = (Kind(x.strip()) for x in args.pair.split(","))
    except ValueError:
        raise InvalidParams(f"--pair must look like G,S; got {args.pair!r}") from None
    doc = {"command": "generators", "category": args.category, "p": p, "q": None,
           "query": {"pair": f"{ka.value},{kb.value}", "src_twist": args.src_twist,
                     "tgt_twist": args.tgt_twist, "max_coh": args.max_coh}}
    if args.category == "P":
        pres = ext_pair_P(p, FunctorAtom(ka, 1, args.src_twist), FunctorAtom(kb, 1, args.tgt_twist))
        gens = [g for g in pres.generators if g.degree.coh <= args.max_coh]
    elif args.category == "stable":
        h = abs(args.src_twist - args.tgt_twist)
        direction = (Direction.SOURCE_TWISTED if args.src_twist > args.tgt_twist
                     else Direction.TARGET_TWISTED)
        pres = ext_pair_stable(StableFamily(p, ka, kb, h, direction), args.max_coh)
        gens = list(pres.generators)
    else:
        N = _need(args, "N")
        h = reduce_twists(N, args.src_twist, args.tgt_twist)
        pres = ext_F_family(p, N, h, (ka, kb), args.max_coh, args.max_index)
        gens = list(pres.generators)
        doc["q"] = p ** N
        doc["query"].update(N=N, h=h, max_index=args.max_index)
    doc["generators"] = [_gen_entry(g, pres.family) for g in gens]
    return doc


def run_bounds(args) -> dict:
    p = _need(args, "p")
    rep = bounds(p, args.s, args.d, m=args.m, i=args.i)
    return {"command": "bounds", "p": p,
            "query": {"s": args.s, "d": args.d, "m": args.m, "i": args.i},
            "bounds": rep.as_dict()}


def run_verify(args) -> dict:
    results = run_suites(args.suite, args.limit)
    return {"command": "verify", "query": {"suite": args.suite, "max": args.limit},
            "verification": {r.suite: r.as_dict() for r in results},
            "passed": all(r.passed for r in results)}


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_table(doc: dict) -> str:
    cmd = doc["command"]
    if cmd == "ext":
        lines = ["s i l dim"] + [" ".join(str(x) for x in row) for row in doc["coefficients"]]
    elif cmd == "generators":
        lines = ["coh src tgt family word"]
        lines += [" ".join(str(x) for x in g["degree"]) + f" {g['family']} {g['word']}"
                  for g in doc["generators"]]
    elif cmd == "bounds":
        lines = [f"{k} {v}" for k, v in sorted(doc["bounds"].items())]
    else:
        lines = [f"{name} {'PASS' if r['passed'] else 'FAIL'} {r['checks']}"
                 for name, r in doc["verification"].items()]
    return "\n".join(lines) + "\n"


def to_latex(doc: dict) -> str:
    cmd = doc["command"]
    if cmd == "ext":
        head = (f"% Ext^s_{{{doc['category']}}}({doc['latex']['source']}, "
                f"{doc['latex']['target']}), p = {doc['p']}")
        body = [" & ".join(str(x) for x in row) + r" \\" for row in doc["coefficients"]]
        cols, title = "rrrr", r"$s$ & $i$ & $l$ & $\dim$ \\"
    elif cmd == "generators":
        head = f"% generators, p = {doc['p']}"
        body = [" & ".join(str(x) for x in g["degree"]) + f" & \\texttt{{{g['word']}}}" + r" \\"
                for g in doc["generators"]]
        cols, title = "rrrl", r"coh & src & tgt & word \\"
    elif cmd == "bounds":
        head = f"% bounds, p = {doc['p']}"
        body = [f"\\texttt{{{k.replace('_', '-')}}} & {v}" + r" \\"
                for k, v in sorted(doc["bounds"].items())]
        cols, title = "lr", r"bound & value \\"
    else:
        head = "% verification"
        body = [f"{n} & {'pass' if r['passed'] else 'fail'}" + r" \\"
                for n, r in doc["verification"].items()]
        cols, title = "ll", r"suite & result \\"
    return "\n".join([head, f"\\begin{{tabular}}{{{cols}}}", title, r"\hline", *body,
                      r"\end{tabular}"]) + "\n"


RENDER = {"json": to_json, "table": to_table, "latex": to_latex}
HANDLERS = {"ext": run_ext, "generators": run_generators, "bounds": run_bounds,
            "verify": run_verify}


def _error_doc(kind, reason, **extra):
    return {"status": "error", "error": {"type": kind, "reason": reason, **extra}}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        defaults = load_config(os.environ.get(CONFIG_ENV))
        args = build_parser(defaults).parse_args(argv)
        doc = HANDLERS[args.command](args)
    except UnsupportedPair as exc:
        stdout.write(to_json(_error_doc("UnsupportedPair", exc.reason)))
        stderr.write(f"extcalc: unsupported pair: {exc.reason}\n")
        return EXIT_UNSUPPORTED
    except ExprError as exc:
        stdout.write(to_json(_error_doc("ParseError", exc.message, offset=exc.offset)))
        stderr.write(f"extcalc: {exc}\n")
        return EXIT_PARAMS
    except (CliError, InvalidParams) as exc:
        stdout.write(to_json(_error_doc("InvalidParams", str(exc))))
        stderr.write(f"extcalc: {exc}\n")
        return EXIT_PARAMS
    doc["status"] = "ok"
    stdout.write(RENDER[args.format](doc))
    if args.command == "verify" and not doc["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
