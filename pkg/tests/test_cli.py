"""Golden-output and exit-code tests for the command line.

Regenerate the golden files with ``FPSOFT_REGEN_GOLDEN=1 pytest tests/test_cli.py``.
"""
import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from fpsoft.cli import EXIT_COMPUTATION, EXIT_USAGE, EXIT_VALIDATION, main, display_grade
from fpsoft.document import load_document, ranking_from_json, relation_from_json

GOLDEN = Path(__file__).parent / "golden"
FIXTURES = Path(__file__).parent.parent / "fixtures"

CASES = {
    "example1_product": ["product", "--input", "example1", "--left", "gammaX", "--right", "gammaY"],
    "example1_product_keep": ["restrict", "--input", "example1", "--left", "gammaX", "--right", "gammaY",
                              "--threshold", "0", "--policy", "keep-empty"],
    "example2_restrict": ["restrict", "--input", "example2", "--left", "gammaX", "--right", "gammaY",
                          "--threshold", "0.3"],
    "example4_invert": ["invert", "--input", "example4", "--relation", "R"],
    "example7_product": ["product", "--input", "example7", "--left", "gammaX"],
    "example7_check": ["check", "--input", "example7", "--relation", "R",
                       "--properties", "symmetric,transitive,reflexive"],
    "example7_check_all": ["check", "--input", "example7", "--relation", "R"],
    "example7_compose": ["compose", "--input", "example7", "--relation", "R"],
    "example8_classes": ["classes", "--input", "example8", "--relation", "R", "--element", "x1"],
    "car_gallery_decide": ["decide", "--input", "car_gallery", "--set", "gammaX", "--threshold", "0.5"],
    "car_gallery_decide_product": ["decide", "--input", "car_gallery", "--set", "gammaX",
                                   "--threshold", "0.1", "--norm", "algebraic_product"],
    "norm_eval_einstein_sum": ["norm-eval", "--kind", "einstein_sum", "0.5", "0.5"],
}
MACHINE_CASES = ["example1_product", "example4_invert", "example7_check", "example8_classes",
                 "car_gallery_decide", "norm_eval_einstein_sum"]


def _argv(args, machine=False):
    out = [str(FIXTURES / f"{a}.json") if prev == "--input" else a for prev, a in zip([None] + args, args)]
    return out + (["--format", "machine"] if machine else [])


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _golden_cases():
    for name in CASES:
        yield name, False
    for name in MACHINE_CASES:
        yield name, True


@pytest.mark.parametrize("name,machine", list(_golden_cases()))
def test_golden(name, machine):
    code, out, err = run(_argv(CASES[name], machine))
    assert code == 0, err
    assert err == ""
    path = GOLDEN / f"{name}{'.json' if machine else '.txt'}"
    if os.environ.get("FPSOFT_REGEN_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out)
    assert out == path.read_text()
    # byte-identical on a second run
    assert run(_argv(CASES[name], machine))[1] == out


def test_decide_text_ends_with_best():
    out = run(_argv(CASES["car_gallery_decide"]))[1]
    assert out.splitlines()[-1] == "best: u3 u7 u8 (0.244)"
    assert "0.055/u1" in out and "0.0/u2" in out


def test_check_reports_true():
    out = run(_argv(CASES["example7_check"]))[1]
    assert out == "symmetric: true\ntransitive: true\nreflexive: true\n"


def test_norm_eval_prints_value():
    assert run(_argv(CASES["norm_eval_einstein_sum"]))[1] == "0.8\n"


def test_machine_relation_reparses():
    args = CASES["example4_invert"]
    payload = json.loads(run(_argv(args, machine=True))[1])
    doc = load_document(FIXTURES / "example4.json")
    from fpsoft.relations import inverse
    assert relation_from_json(doc, payload) == inverse(doc.relation("R"))


def test_machine_product_reparses():
    payload = json.loads(run(_argv(CASES["example1_product"], machine=True))[1])
    doc = load_document(FIXTURES / "example1.json")
    from fpsoft.relations import cartesian_product
    assert relation_from_json(doc, payload) == cartesian_product(doc.fp_set("gammaX"), doc.fp_set("gammaY"))


def test_machine_ranking_reparses():
    payload = json.loads(run(_argv(CASES["car_gallery_decide"], machine=True))[1])
    doc = load_document(FIXTURES / "car_gallery.json")
    ranking = ranking_from_json(doc, payload)
    assert ranking.best == ("u3", "u7", "u8")
    assert ranking.scores["u1"] == 0.5 / 9


@pytest.mark.parametrize("argv,code", [
    ([], EXIT_USAGE),
    (["frobnicate"], EXIT_USAGE),
    (["decide", "--input", "car_gallery", "--set", "gammaX"], EXIT_USAGE),
    (["decide", "--input", "car_gallery", "--set", "gammaX", "--threshold", "1.2"], EXIT_USAGE),
    (["decide", "--input", "car_gallery", "--set", "gammaX", "--threshold", "0.5", "--norm", "maximum"], EXIT_USAGE),
    (["decide", "--input", "car_gallery", "--set", "gammaX", "--threshold", "0.5", "--policy", "x"], EXIT_USAGE),
    (["check", "--input", "example7", "--relation", "R", "--properties", "shiny"], EXIT_USAGE),
    (["norm-eval", "--kind", "nope", "0.1", "0.2"], EXIT_USAGE),
    (["decide", "--input", "car_gallery", "--set", "nope", "--threshold", "0.5"], EXIT_VALIDATION),
    (["invert", "--input", "example7", "--relation", "nope"], EXIT_VALIDATION),
    (["classes", "--input", "example7", "--relation", "R", "--element", "x4"], EXIT_VALIDATION),
    (["check", "--input", "example2", "--relation", "R"], EXIT_COMPUTATION),
    (["compose", "--input", "example2", "--relation", "R"], EXIT_COMPUTATION),
])
def test_exit_codes(argv, code):
    got, out, err = run(_argv(argv))
    assert got == code
    assert out == ""
    assert err


def test_bad_document_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"universe": ["u1"], "parameters": ["x1"], "fuzzy_sets": {"X": {"x1": "1.2"}}}')
    code, out, err = run(["decide", "--input", str(bad), "--set", "G", "--threshold", "0.5"])
    assert code == EXIT_VALIDATION and out == "" and "outside" in err
    code, _, err = run(["decide", "--input", str(tmp_path / "missing.json"), "--set", "G", "--threshold", "0.5"])
    assert code == EXIT_VALIDATION and "cannot read" in err


def test_empty_support_is_computation_error(tmp_path):
    doc = tmp_path / "empty.json"
    doc.write_text(json.dumps({"universe": ["u1"], "parameters": ["x1"],
                               "fuzzy_sets": {"X": {}}, "fp_soft_sets": {"G": {"fuzzy_set": "X"}}}))
    code, out, err = run(["decide", "--input", str(doc), "--set", "G", "--threshold", "0"])
    assert code == EXIT_COMPUTATION and "positive grade" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fpsoft", *_argv(CASES["car_gallery_decide"])],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "car_gallery_decide.txt").read_text()


@pytest.mark.parametrize("value,text", [
    (0.5 / 9, "0.055"), (2.2 / 9, "0.244"), (0.0, "0.0"), (1.0, "1.0"),
    (0.5, "0.5"), (0.6999999999999999, "0.7"), (0.30000000000000004, "0.3"), (1 / 3, "0.333"),
])
def test_display_grade(value, text):
    assert display_grade(value) == text
