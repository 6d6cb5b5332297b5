"""Command-line interface: formats, exit codes, round trips."""
import json
import math
import re
from fractions import Fraction

import pytest

from sincpow import ConvergenceClass, SymValue, evaluate, sym_to_decimal
from sincpow.cli import main, render_exact, render_json

from test_closedform import TABLE_VALUES

_TERM = re.compile(r"^(-)?(?:(\d+)(?:/(\d+))?\*)?(?:pi|ln\((\d+)\))$")


def parse_exact(text):
    """Inverse of render_exact, used to check the rendering is lossless."""
    if text == "0":
        return SymValue()
    value = SymValue()
    for token in text.replace(" + ", ";+").replace(" - ", ";-").split(";"):
        token = token.lstrip("+")
        m = _TERM.match(token)
        assert m, token
        neg, num, den, arg = m.groups()
        coeff = Fraction(int(num or 1), int(den or 1))
        if neg:
            coeff = -coeff
        if arg is None:
            value = value + SymValue(pi_coeff=coeff)
        else:
            value = value + SymValue(log_terms=((coeff, int(arg)),))
    return value


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_exact_pinned(capsys):
    code, out, err = run(capsys, "eval", "1", "1")
    assert (code, out, err) == (0, "1/2*pi\n", "")
    code, out, _ = run(capsys, "eval", "5", "2")
    assert out == "15/16*ln(3) - 5/16*ln(5)\n"
    code, out, _ = run(capsys, "eval", "5", "4")
    assert out == "-45/32*ln(3) + 125/96*ln(5)\n"
    code, out, _ = run(capsys, "eval", "4", "3")
    assert out == "ln(2)\n"


def test_eval_latex_pinned(capsys):
    _, out, _ = run(capsys, "eval", "3", "3", "--format", "latex")
    assert out == "\\frac{3\\pi}{8}\n"
    _, out, _ = run(capsys, "eval", "1", "1", "--format", "latex")
    assert out == "\\frac{\\pi}{2}\n"


def test_eval_decimal(capsys):
    _, out, _ = run(capsys, "eval", "1", "1", "--format", "decimal", "--digits", "10")
    assert out == "1.5707963268\n"
    _, out, _ = run(capsys, "eval", "4", "3", "--format", "decimal")
    assert out == "0.693147180560\n"  # --digits defaults to 12


def test_eval_divergent_exit_codes(capsys):
    code, out, err = run(capsys, "eval", "2", "1")
    assert code == 3 and out == ""
    assert err == "diverges at infinity (q=1, p even)\n"
    code, out, err = run(capsys, "eval", "1", "2")
    assert code == 2 and out == ""
    assert err == "diverges at zero (q > p)\n"


def test_eval_divergent_json_still_emits_object(capsys):
    code, out, err = run(capsys, "eval", "2", "1", "--format", "json")
    assert code == 3
    obj = json.loads(out)
    assert obj["convergent"] is False
    assert obj["decimal"] is None
    assert obj["divergence"] == "at_infinity"
    assert err == "diverges at infinity (q=1, p even)\n"


def test_usage_errors_exit_1(capsys):
    for argv in (
        [],
        ["eval"],
        ["eval", "0", "3"],
        ["eval", "2", "x"],
        ["eval", "1", "1", "--format", "bogus"],
        ["eval", "1", "1", "--digits", "0"],
        ["eval", "1", "1", "--digits", "51"],
        ["table", "--pmax", "51"],
        ["verify", "--pmax", "0"],
        ["verify", "--tol", "1e-11"],
        ["frobnicate"],
    ):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 1, argv
        capsys.readouterr()


def test_exact_rendering_is_lossless():
    for value in TABLE_VALUES.values():
        assert parse_exact(render_exact(value)) == value
    assert parse_exact(render_exact(SymValue())) == SymValue()
    for p in range(1, 26):
        for q in range(1, p + 1):
            if not (q == 1 and p % 2 == 0):
                value = evaluate(p, q)
                assert parse_exact(render_exact(value)) == value


def test_exact_and_decimal_agree(capsys):
    # float-evaluate the exact rendering with math.pi/math.log and compare
    for p, q in ((1, 1), (5, 2), (5, 4), (9, 6), (12, 8)):
        _, exact_out, _ = run(capsys, "eval", str(p), str(q))
        _, dec_out, _ = run(capsys, "eval", str(p), str(q), "--format", "decimal")
        value = parse_exact(exact_out.strip())
        approx = float(value.pi_coeff) * math.pi + sum(
            float(c) * math.log(arg) for c, arg in value.log_terms
        )
        assert abs(approx - float(dec_out)) < 1e-10


def test_table_text_grid(capsys):
    code, out, err = run(capsys, "table")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 6
    assert re.split(r" {2,}", lines[0].strip()) == ["p=1", "p=2", "p=3", "p=4", "p=5"]
    cells = {}
    for line in lines[1:]:
        tokens = re.split(r" {2,}", line.strip())
        q = int(tokens[0].removeprefix("q="))
        for p, cell in enumerate(tokens[1:], start=1):
            cells[(p, q)] = cell
    assert len(cells) == 25
    assert sum(1 for cell in cells.values() if cell == "-") == 12
    for key, value in TABLE_VALUES.items():
        assert cells[key] == render_exact(value), key
    assert cells[(5, 4)] == "-45/32*ln(3) + 125/96*ln(5)"
    assert cells[(2, 3)] == "-"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--format", "json", "--pmax", "5", "--qmax", "5")
    cells = json.loads(out)
    assert len(cells) == 25
    byidx = {(c["p"], c["q"]): c for c in cells}
    assert cells[0]["p"] == 1 and cells[0]["q"] == 1  # row-major in q
    assert byidx[(3, 2)]["log_terms"] == [{"num": "3", "den": "4", "arg": 3}]
    assert byidx[(1, 1)]["pi_coeff"] == {"num": "1", "den": "2"}
    assert byidx[(2, 1)]["divergence"] == "at_infinity"
    assert byidx[(1, 5)]["divergence"] == "at_zero"
    assert sum(c["convergent"] for c in cells) == 13


def test_json_round_trip(capsys):
    for p, q in ((1, 1), (5, 2), (5, 4), (2, 1), (1, 3)):
        _, out, _ = run(capsys, "eval", str(p), str(q), "--format", "json")
        obj = json.loads(out)
        if obj["convergent"]:
            value = SymValue(
                pi_coeff=Fraction(int(obj["pi_coeff"]["num"]), int(obj["pi_coeff"]["den"])),
                log_terms=tuple(
                    (Fraction(int(t["num"]), int(t["den"])), t["arg"])
                    for t in obj["log_terms"]
                ),
            )
            convergence = ConvergenceClass.CONVERGENT
        else:
            value = None
            convergence = ConvergenceClass(obj["divergence"])
        again = render_json(p, q, value, convergence, digits=12)
        assert again + "\n" == out


def test_json_decimal_matches_library(capsys):
    _, out, _ = run(capsys, "eval", "5", "3", "--format", "json", "--digits", "17")
    obj = json.loads(out)
    assert obj["decimal"] == sym_to_decimal(evaluate(5, 3), 17)


def test_verify_small_sweep(capsys):
    code, out, err = run(capsys, "verify", "--pmax", "3", "--qmax", "2", "--tol", "1e-5")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[-1] == "verified 4 cells: 4 pass, 0 fail"
    assert re.fullmatch(r"I\(1,1\): diff=\d\.\d{3}e[+-]\d+ bound=\d\.\d{3}e[+-]\d+ PASS", lines[0])
    assert sum(1 for line in lines if line.endswith("PASS")) == 4
    assert not any("FAIL" in line for line in lines)
