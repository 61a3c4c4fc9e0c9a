import io
import json
import subprocess
import sys

import pytest

from sumpow import cli
from sumpow.errors import InvariantViolation


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_bernoulli():
    assert run(["bernoulli", "10"]) == (0, "5/66\n", "")
    assert run(["bernoulli", "0"])[1] == "1/1\n"


def test_search_text():
    code, out, _ = run(["search", "2", "2", "--xmax", "10"])
    assert code == 0 and out == "1 2 2\n2 5 2\n"


def test_poly_normalizations():
    assert run(["poly", "3", "2"])[1] == "0: 0/1\n1: 0/1\n2: 3/1\n3: 14/1\n4: 15/1\n"
    assert run(["poly", "2", "2", "--normalization", "sum"])[1] == "0: 0/1\n1: 1/6\n2: 3/2\n3: 7/3\n"


def test_profile():
    out = run(["profile", "3", "2"])[1].splitlines()
    assert out[:3] == ["multiplicities: 2 1 1", "distinct_roots: 3", "zero_multiplicity: 2"]


def test_classify_forms():
    code, out, _ = run(["classify", "4", "2", "4"])
    assert code == 0
    assert "verdict=FiniteByBrindza" in out and "case=Case1ii" in out and "obstruction=-1/186" in out
    code, out, _ = run(["classify", "5", "3", "--nmax", "6"])
    assert code == 0 and len(out.splitlines()) == 5


def test_verify_passes():
    code, out, _ = run(["verify", "--kmax", "8", "--lmax", "5"])
    assert code == 0
    assert out.splitlines()[-1].startswith("PASS")
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_exit_2_unreachable_on_acceptance_ranges():
    code, out, _ = run(["verify", "--kmax", "20", "--lmax", "10", "--nmax", "50"])
    assert code == 0 and out.splitlines()[-1] == "PASS (8 checks)"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["bernoulli"],
        ["bernoulli", "abc"],
        ["bernoulli", "-1"],
        ["poly", "2"],
        ["poly", "2", "1"],
        ["poly", "0", "2"],
        ["poly", "2", "2", "--normalization", "other"],
        ["profile", "1", "2"],
        ["classify", "4", "2"],
        ["classify", "4", "2", "3", "--nmax", "5"],
        ["classify", "4", "2", "1"],
        ["search", "2", "2"],
        ["search", "2", "2", "--xmax", "0"],
        ["verify", "--kmax", "8"],
        ["verify", "--kmax", "1", "--lmax", "5"],
    ],
)
def test_malformed_input_exits_1(argv):
    code, out, err = run(argv)
    assert code == 1
    assert out == "" and err.startswith("error:")


def test_error_record_in_json_mode():
    code, out, err = run(["--json", "poly", "2", "1"])
    assert code == 1 and err
    rec = json.loads(out)
    assert rec["status"] == "error" and "l must be >= 2" in rec["result"]["message"]


def test_invariant_violation_exits_2(monkeypatch):
    def boom(*a, **kw):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "bernoulli_number", boom)
    code, _, err = run(["bernoulli", "4"])
    assert code == 2 and "internal invariant violation" in err


ROUND_TRIP = [
    ["bernoulli", "12"],
    ["poly", "5", "3"],
    ["poly", "4", "2", "--normalization", "sum"],
    ["profile", "7", "3"],
    ["classify", "3", "2", "2"],
    ["classify", "6", "4", "--nmax", "8"],
    ["search", "1", "2", "--xmax", "900"],
    ["search", "6", "2", "--xmax", "3"],
    ["search", "5", "7", "--xmax", "5"],
    ["verify", "--kmax", "6", "--lmax", "4", "--nmax", "10"],
]


@pytest.mark.parametrize("argv", ROUND_TRIP)
@pytest.mark.parametrize("flag_first", [True, False])
def test_json_round_trip(argv, flag_first):
    code_t, text, _ = run(argv)
    code_j, js, _ = run(["--json", *argv] if flag_first else [*argv, "--json"])
    assert code_t == code_j == 0
    records = [json.loads(line) for line in js.splitlines()]
    assert all(set(r) == {"command", "parameters", "result", "status"} for r in records)
    assert all(r["status"] == "ok" for r in records)
    assert cli.render_all(records) == text


def test_json_rationals_are_strings():
    _, js, _ = run(["--json", "poly", "2", "2"])
    rec = json.loads(js)
    assert rec["result"]["coefficients"] == ["0/1", "1/2", "9/2", "7/1"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sumpow", "search", "2", "2", "--xmax", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1 2 2\n2 5 2\n"
    proc = subprocess.run([sys.executable, "-m", "sumpow", "bernoulli", "x"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stderr


def test_failed_verify_exits_2_and_round_trips(monkeypatch):
    from sumpow.verify import CheckResult

    monkeypatch.setattr(
        cli,
        "run_all",
        lambda *a: [CheckResult("bernoulli", True, 3), CheckResult("proposition1", False, 7, "k=9, l=4")],
    )
    code, text, _ = run(["verify", "--kmax", "9", "--lmax", "4"])
    assert code == 2
    assert text.splitlines() == [
        "PASS bernoulli (3 cases)",
        "FAIL proposition1 (7 cases): first counterexample: k=9, l=4",
        "FAIL (1 of 2 checks failed: proposition1)",
    ]
    code, js, _ = run(["verify", "--kmax", "9", "--lmax", "4", "--json"])
    assert code == 2
    assert cli.render_all(json.loads(line) for line in js.splitlines()) == text
