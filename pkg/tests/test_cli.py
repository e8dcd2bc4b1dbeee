"""Command-line interface: outputs, formats, determinism, exit codes."""

import json

import pytest

from spinfh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_constants_example(capsys):
    code, out = run_cli(
        capsys,
        "constants", "--variant", "spin", "--lam", "4", "--mu", "2",
        "--n", "8", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["entries"] == {
        "[2,2]": -18,
        "[2]": -60,
        "[4,2]": 1,
        "[4]": 15,
        "[6]": -7,
    }


def test_constants_csv(capsys):
    code, out = run_cli(
        capsys, "constants", "--lam", "2", "--mu", "2", "--n", "6",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "nu,coefficient"
    assert "\"[4]\",-5" in out


def test_verify_lagrange(capsys):
    code, out = run_cli(capsys, "verify", "lagrange", "--rmax", "5")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["values"] == [-2, 2, -2, 2, -2]


def test_jm_top(capsys):
    code, out = run_cli(capsys, "jm", "--n", "6", "--r", "2", "--top")
    assert code == 0
    data = json.loads(out)
    got = {tuple(r["lambda"]): r["computed_A"] for r in data["rows"]}
    assert got == {(2, 2): 1, (4,): -2}


def test_jm_targeted(capsys):
    code, out = run_cli(capsys, "jm", "--n", "7", "--targeted", "6")
    assert code == 0
    data = json.loads(out)
    assert data["coefficient"] == -5 and data["match"] is True


def test_class_listing(capsys):
    code, out = run_cli(capsys, "class", "--lam", "2", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 8
    perms = [tuple(m["perm"]) for m in data["members"]]
    assert perms == sorted(perms)


def test_mult_and_graded(capsys):
    code, out = run_cli(capsys, "mult", "--lam", "2", "--mu", "2", "--n", "6")
    assert code == 0
    data = json.loads(out)
    assert data["decomposition"]["[]"] == 40
    code, out = run_cli(capsys, "graded", "--lam", "4", "--mu", "2")
    assert code == 0
    data = json.loads(out)
    assert data["coords"] == {"[4,2]": 1, "[6]": -7}


def test_fit_emission(capsys):
    code, out = run_cli(capsys, "fit", "--lam", "2", "--mu", "2", "--nu", "0")
    assert code == 0
    data = json.loads(out)
    assert data["poly"] == {"binomial_coeffs": [0, 0, 0, 2]}
    assert len(data["validated_on"]) == 2


def test_empty_partition_flag(capsys):
    code, out = run_cli(capsys, "graded", "--lam", "0", "--mu", "4,2")
    assert code == 0
    data = json.loads(out)
    assert data["coords"] == {"[4,2]": 1}


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["constants", "--lam", "4"])
    assert err.value.code == 64
    with pytest.raises(SystemExit) as err:
        main(["nonsense"])
    assert err.value.code == 64


def test_budget_cap_exit_code(capsys):
    code = main(["mult", "--lam", "2", "--mu", "2", "--n", "11"])
    assert code == 2


def test_determinism(capsys):
    _, out1 = run_cli(capsys, "constants", "--lam", "2", "--mu", "2", "--n", "6")
    _, out2 = run_cli(capsys, "constants", "--lam", "2", "--mu", "2", "--n", "6")
    assert out1 == out2
    _, out1 = run_cli(capsys, "verify", "generators", "--seed", "7", "--budget", "4")
    _, out2 = run_cli(capsys, "verify", "generators", "--seed", "7", "--budget", "4")
    assert out1 == out2
    data = json.loads(out1)
    assert data["seed"] == 7


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out = run_cli(
        capsys, "constants", "--lam", "2", "--mu", "2", "--n", "6",
        "--out", str(target),
    )
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["entries"]["[2,2]"] == 2
