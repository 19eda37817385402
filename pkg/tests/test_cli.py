import json

import pytest

from cafcc.cli import EXIT_DEGENERATE, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, cmd_list, main

REPORT_KEYS = {"schema", "command", "id", "trials", "seed", "tol", "residuals", "pass", "retries"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report(out: str) -> dict:
    return json.loads(out)


def test_list():
    text = cmd_list()
    suites = text.split("equations:")[0].splitlines()[1:]
    assert len(suites) == 15
    d1 = [line for line in text.splitlines() if line.strip().startswith("D1")]
    assert d1 and "face-independent" in d1[0]
    a4 = [line for line in text.splitlines() if line.strip().startswith("A4")]
    assert any("--g2" in line for line in a4)


def test_list_command(capsys):
    code, out = run(capsys, "list")
    assert code == EXIT_PASS and "suites:" in out


def test_check_pass(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out = run(capsys, "check", "--suite", "A2_00", "--trials", "20", "--seed", "1", "--json", str(path))
    assert code == EXIT_PASS
    rep = report(out)
    assert REPORT_KEYS <= set(rep)
    assert set(rep["residuals"]) == {"step3", "step4", "step5", "step6", "max"}
    assert rep["schema"] == "cafcc-report/1" and rep["pass"] is True
    assert json.loads(path.read_text()) == rep


def test_check_bogus_suite(capsys):
    assert main(["check", "--suite", "bogus"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_check_missing_suite():
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == EXIT_USAGE


def test_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == EXIT_USAGE


def test_check_corrupt(capsys):
    code, out = run(capsys, "check", "--suite", "row1", "--trials", "20", "--corrupt", "y0")
    assert code == EXIT_FAIL
    assert report(out)["pass"] is False


def test_check_a4_needs_invariants(capsys):
    assert main(["check", "--suite", "A4"]) == EXIT_USAGE
    code, _ = run(capsys, "check", "--suite", "A4", "--g2", "1", "--g3", "0", "--trials", "3")
    assert code == EXIT_PASS


def test_check_zero_trials():
    assert main(["check", "--suite", "row1", "--trials", "0"]) == EXIT_USAGE


def test_check_tolerance_flag(capsys):
    code, out = run(capsys, "check", "--suite", "row2", "--trials", "3", "--tol", "1e-7,1e-8")
    assert code == EXIT_PASS
    assert report(out)["tol"] == [1e-7, 1e-8]


def test_check_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("CAFCC_DEFAULT_TOL", "1e-30")
    code, out = run(capsys, "check", "--suite", "A3d1", "--trials", "3")
    assert code == EXIT_FAIL
    assert report(out)["tol"] == [1e-30, 1e-30]


def test_evolve(capsys, tmp_path):
    path = tmp_path / "lat.csv"
    code, out = run(capsys, "evolve", "--equation", "A2_00", "--init", "staircase", "--size", "8", "--seed", "3",
                    "--csv", str(path))
    assert code == EXIT_PASS
    lines = path.read_text().splitlines()
    assert lines[0] == "i,j,role,re,im"
    assert len(lines) - 1 <= 17 * 17
    assert report(out)["csv"] == str(path)


def test_evolve_bad_init():
    assert main(["evolve", "--equation", "A2_00", "--init", "spiral"]) == EXIT_USAGE


def test_evolve_stuck(capsys, tmp_path, monkeypatch):
    # equal parameters make every corner coefficient of A2_00 vanish
    from cafcc import cli
    from cafcc.ids import SpectralPair
    from cafcc.lattice import seed_initial as real_seed

    same = SpectralPair(0.9, 0.9)
    monkeypatch.setattr(cli, "seed_initial", lambda kind, size, seed: real_seed(kind, size, seed, same, same))
    code, out = run(capsys, "evolve", "--equation", "A2_00", "--csv", str(tmp_path / "x.csv"))
    assert code == EXIT_DEGENERATE
    assert report(out)["pass"] is False


def test_verify_abs(capsys):
    code, out = run(capsys, "verify-abs", "--equation", "C1", "--trials", "50")
    rep = report(out)
    assert code == EXIT_PASS and rep["match"] is True and rep["target"] == "H1e0"


def test_verify_abs_a4(capsys):
    code, out = run(capsys, "verify-abs", "--equation", "A4", "--g2", "1", "--g3", "0")
    rep = report(out)
    assert code == EXIT_PASS and rep["discriminant_degrees"] == [4, 4, 4, 4]


def test_verify_abs_type_b():
    assert main(["verify-abs", "--equation", "B2_100"]) == EXIT_USAGE


def test_derive_check_case(capsys):
    code, out = run(capsys, "derive-check", "--case", "hyperbolic2")
    rep = report(out)
    assert code == EXIT_PASS and rep["pass"] is True and len(rep["checks"]) == 3


def test_derive_check_equation(capsys):
    code, out = run(capsys, "derive-check", "--equation", "C2_000", "--trials", "10")
    assert code == EXIT_PASS and report(out)["id"] == "C2_000"


def test_derive_check_three_leg(capsys):
    code, out = run(capsys, "derive-check", "--three-leg", "Q1d1-rational")
    rep = report(out)
    assert code == EXIT_PASS and "exact point" in rep["checks"][0]["note"]


def test_derive_check_needs_target():
    assert main(["derive-check"]) == EXIT_USAGE
    assert main(["derive-check", "--case", "nope"]) == EXIT_USAGE


def test_exit_codes_stable(capsys):
    first = run(capsys, "check", "--suite", "row6", "--trials", "5", "--seed", "9")
    second = run(capsys, "check", "--suite", "row6", "--trials", "5", "--seed", "9")
    assert first == second
