import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extcalc import cli
from extcalc.core import Kind
from extcalc.expr import ExprError, latex_word, parse_atom, parse_word
from extcalc.pcalc import FunctorAtom

SCHEMA = json.loads((pathlib.Path(__file__).parents[1] / "docs" / "result_schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc, out


def test_parse_words():
    w = parse_word("G^2(1) * S^3 *L(2)*I")
    assert w.factors == (FunctorAtom(Kind.GAMMA, 2, 1), FunctorAtom(Kind.SYM, 3, 0),
                         FunctorAtom(Kind.LAMBDA, 1, 2), FunctorAtom(Kind.ID, 1, 0))
    assert parse_atom("S") == FunctorAtom(Kind.SYM, 1, 0)
    assert latex_word(w) == r"\Gamma^{2(1)} \otimes S^{3} \otimes \Lambda^{1(2)} \otimes I"


@pytest.mark.parametrize("text,offset", [("G^2(1", 5), ("X", 0), ("G^", 2), ("G*", 2),
                                         ("I^2", 0), ("G S", 2), ("Γ^2", 0), ("S*Γ", 2)])
def test_parse_errors_report_byte_offsets(text, offset):
    with pytest.raises(ExprError) as info:
        parse_word(text)
    assert info.value.offset == offset


def test_parse_error_offset_counts_bytes():
    with pytest.raises(ExprError) as info:
        parse_word("G*G*Λ")
    assert info.value.offset == 4
    with pytest.raises(ExprError) as info:
        parse_word("G(1)*S^2 Λ")
    assert info.value.offset == 9


def test_ext_table_example():
    code, out, _ = run("ext", "--category", "P", "--p", "2", "--source", "G^2(1)",
                       "--target", "S^2(1)", "--max-coh", "6", "--format", "table")
    assert code == 0
    assert out.splitlines()[1:] == ["0 2 2 1", "2 2 2 1", "4 2 2 1"]


def test_ext_F_example():
    code, doc, _ = run_json("ext", "--category", "F", "--p", "2", "--N", "1", "--source", "I",
                            "--target", "I", "--max-coh", "6")
    assert code == 0
    assert doc["series"] == [1, 0, 1, 0, 1, 0, 1]
    assert doc["q"] == 2


def test_unsupported_pair_exit_code():
    code, doc, _ = run_json("ext", "--category", "P", "--p", "2", "--source", "S^1",
                            "--target", "G^2(1)")
    assert code == 2
    assert doc["error"]["type"] == "UnsupportedPair"


@pytest.mark.parametrize("argv", [
    ["ext", "--category", "P", "--p", "2", "--source", "G^2(1", "--target", "S"],
    ["ext", "--category", "P", "--p", "4", "--source", "G", "--target", "S"],
    ["ext", "--category", "P", "--source", "G", "--target", "S"],
    ["ext", "--category", "F", "--p", "2", "--source", "G", "--target", "S"],
    ["ext", "--category", "stable", "--p", "2", "--source", "G*G", "--target", "S^2"],
    ["ext", "--category", "Q", "--p", "2", "--source", "G", "--target", "S"],
    ["bounds", "--p", "2", "--s", "-1", "--d", "2"],
    ["nonsense"],
])
def test_param_errors_exit_3(argv):
    code, out, err = run(*argv)
    assert code == 3
    assert json.loads(out)["status"] == "error"
    assert err


def test_json_is_canonical_and_matches_table():
    argv = ["ext", "--category", "P", "--p", "3", "--source", "G^2(1)", "--target", "S^6",
            "--max-coh", "30"]
    code, doc, out = run_json(*argv)
    assert code == 0
    assert cli.to_json(json.loads(out)) == out
    _, table, _ = run(*argv, "--format", "table")
    rows = [[int(x) for x in line.split()] for line in table.splitlines()[1:]]
    assert rows == doc["coefficients"]
    assert rows == sorted(rows)


def test_json_has_no_floats():
    _, doc, _ = run_json("bounds", "--p", "3", "--s", "7", "--d", "4")

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(doc)


def test_stable_and_generators():
    code, doc, _ = run_json("ext", "--category", "stable", "--p", "2", "--source", "G^4",
                            "--target", "L^2(1)", "--max-coh", "8")
    assert code == 0 and doc["coefficients"] == [[4, 4, 2, 1], [8, 4, 2, 1]]
    code, doc, _ = run_json("generators", "--category", "F", "--p", "2", "--N", "1",
                            "--pair", "G,S", "--max-coh", "4", "--max-index", "4")
    assert code == 0
    assert len(doc["generators"]) == 9
    code, doc, _ = run_json("generators", "--category", "P", "--p", "3", "--pair", "L,L",
                            "--src-twist", "2", "--tgt-twist", "1")
    assert [g["degree"] for g in doc["generators"]] == [[2, 1, 3], [8, 1, 3], [14, 1, 3]]
    assert {g["family"] for g in doc["generators"]} == {"divided_power"}
    code, _, _ = run("generators", "--category", "F", "--p", "2", "--N", "1", "--pair", "S,S")
    assert code == 2


def test_bounds_command():
    code, doc, _ = run_json("bounds", "--p", "2", "--s", "5", "--d", "3", "--m", "2", "--i", "6")
    assert code == 0
    assert doc["bounds"]["strong_m"] == 2
    assert doc["bounds"]["vanish_h"] == 4
    assert doc["bounds"]["gl_n"] == 10


def test_latex_output():
    code, out, _ = run("ext", "--category", "P", "--p", "2", "--source", "G^2(1)",
                       "--target", "L^2(1)", "--format", "latex")
    assert code == 0
    assert r"\Gamma^{2(1)}" in out and r"\Lambda^{2(1)}" in out
    assert r"\begin{tabular}" in out


def test_verify_suites():
    code, doc, _ = run_json("verify", "--suite", "all")
    assert code == 0 and doc["passed"]
    assert set(doc["verification"]) == {"koszul", "derham", "genkoszul", "cor47", "duality",
                                        "family-vs-assembly"}


def test_verify_failure_exit_code(monkeypatch):
    from extcalc import verify

    def broken(limit=None):
        res = verify.SuiteResult("koszul")
        res.record(False, "forced")
        return res

    monkeypatch.setitem(verify.SUITES, "koszul", broken)
    code, doc, _ = run_json("verify", "--suite", "all")
    assert code == 1 and not doc["passed"]
    assert doc["verification"]["koszul"]["failures"] == ["forced"]
    assert doc["verification"]["derham"]["passed"]


def test_config_file(tmp_path, monkeypatch):
    cfg = tmp_path / "extcalc.cfg"
    cfg.write_text("# defaults\np = 3\nN = 1\nmax_coh = 4\nformat = table\n")
    monkeypatch.setenv(cli.CONFIG_ENV, str(cfg))
    code, out, _ = run("ext", "--category", "F", "--source", "I", "--target", "I")
    assert code == 0
    assert out.splitlines() == ["s i l dim", "0 1 1 1", "2 1 1 1", "4 1 1 1"]
    # flags win over the file
    code, out, _ = run("ext", "--category", "F", "--p", "2", "--source", "I", "--target", "I",
                       "--max-coh", "2", "--format", "json")
    assert code == 0 and json.loads(out)["p"] == 2
    cfg.write_text("colour = blue\n")
    assert run("bounds", "--s", "1", "--d", "1")[0] == 3


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="GLSI^()*0123 x", max_size=10))
def test_arbitrary_expressions_never_crash(text):
    code, out, _ = run("ext", "--category", "P", "--p", "2", "--source", text, "--target", "S^2",
                       "--max-coh", "4")
    assert code in (0, 2, 3)
    jsonschema.validate(json.loads(out), SCHEMA)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "extcalc", "bounds", "--p", "3", "--s", "1",
                          "--d", "1"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["bounds"]["weak_q"] == 3
