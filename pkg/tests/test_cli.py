import io
import json
import subprocess
import sys

import pytest

from qsymtri.cli import CliConfig, main, parse_config, run
from qsymtri.combinatorics import DyckPath, Triangulation, catalan
from qsymtri.polynomial import Polynomial

SAMPLE_LITERAL = '[["P",1,1],["N",2],["P",3,3],["P",3,5],["P",5,5]]'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(parse_config(list(argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def test_bijection_n0():
    assert call("bijection", "--n", "0") == (0, "{} ↦ UD\n", "")


def test_bijection_table_json_roundtrips():
    code, out, _ = call("bijection", "--n", "3", "--format", "json")
    assert code == 0
    table = json.loads(out)["table"]
    assert len(table) == catalan(4)
    for row in table:
        t = Triangulation.from_json(row["triangulation"], n=3)
        assert t.encode() == row["triangulation"]
        DyckPath(row["path"])


def test_bijection_single_objects():
    code, out, _ = call("bijection", "--n", "5", "--triangulation", SAMPLE_LITERAL)
    assert code == 0 and out.strip().endswith("UUDUDDUUDDUD")
    code, out, _ = call("bijection", "--path", "UUDUDDUUDDUD", "--format", "json")
    assert code == 0
    assert json.loads(out)["triangulation"] == {
        "n": 5,
        "diagonals": [["N", 2], ["P", 1, 1], ["P", 3, 3], ["P", 3, 5], ["P", 5, 5]],
    }


def test_poly_sample():
    code, out, _ = call("poly", "--n", "5", "--triangulation", SAMPLE_LITERAL)
    assert code == 0
    assert out.splitlines()[-1] == "leading monomial: x1·x3^2·x5"
    assert out.startswith("B_T = x1·x3^2·x5 - x1·x3^2·x6")

    code, out, _ = call("poly", "--n", "5", "--triangulation", SAMPLE_LITERAL, "--format", "json")
    data = json.loads(out)
    p = Polynomial.from_json(data["polynomial"], 6)
    assert len(p) == 16 and data["leading_monomial"] == [1, 0, 2, 0, 1, 0]


def test_monomial():
    assert call("monomial", "--path", "UUDUDDUUDDUD") == (0, "M_D = x1·x3^2·x5\n", "")
    assert call("monomial", "--path", "UUDD")[1] == "M_D = 1\n"


def test_enumerate():
    code, out, _ = call("enumerate", "--n", "2", "--kind", "paths", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 5 and "UUUDDD" in data["items"]
    code, out, _ = call("enumerate", "--n", "1")
    assert out.splitlines() == ['[["N", 1]]', '[["P", 1, 1]]', "# 2 triangulations (Catalan c_2 = 2)"]


@pytest.mark.parametrize("check", ["leading", "lemma", "involution", "pieces"])
def test_verify_pass(check):
    code, out, _ = call("verify", "--check", check, "--n", "5")
    assert code == 0
    assert out == f"{check}: PASS (132 cases)\n"


def test_verify_basis_exit_codes():
    code, out, _ = call("verify", "--check", "basis", "--n", "3")
    assert code == 0 and "basis: PASS (14 cases)" in out
    code, out, _ = call("verify", "--check", "basis", "--n", "4", "--format", "json")
    assert code == 1
    data = json.loads(out)
    degree_2 = data["checks"]["basis"]["reports"][0]["per_degree"][2]
    assert degree_2["independent"] is False


def test_verify_all_small():
    code, out, _ = call("verify", "--n", "2")
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines() if ": " in line] == [
        "leading",
        "lemma",
        "involution",
        "pieces",
        "basis",
        "monomial",
    ]


def test_verify_refuses_large_n():
    code, out, err = call("verify", "--check", "basis", "--n", "9")
    assert code == 2 and out == ""
    assert "limit 6" in err


def test_hilbert():
    code, out, _ = call("hilbert", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["dim_Q"] == [1, 2, 2, 0] and data["total_quotient_dim"] == 5


@pytest.mark.parametrize(
    "argv, message",
    [
        (["poly", "--n", "2", "--triangulation", '[["N",1],["P",1,2]]'], "crossing"),
        (["monomial", "--path", "UDDU"], "below the diagonal"),
        (["monomial", "--path", "UUD"], "unbalanced"),
        (["bijection", "--path", "UUDD", "--n", "3"], "does not match"),
        (["enumerate"], "--n is required"),
    ],
)
def test_input_errors(argv, message):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert message in err


def test_deterministic_output():
    assert call("bijection", "--n", "4", "--format", "json") == call("bijection", "--n", "4", "--format", "json")


def test_argparse_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--check", "nonsense", "--n", "1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qsymtri", "monomial", "--path", "UDUD"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "M_D = x1\n"


def test_config_defaults():
    cfg = parse_config(["hilbert", "--n", "1"])
    assert cfg == CliConfig(command="hilbert", n=1, check="all", workers=cfg.workers)
