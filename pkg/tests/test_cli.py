"""Command-line behaviour: outputs, exit codes, determinism."""

import json

from motzeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFanCheck:
    def test_preset_report(self, capsys):
        code, out, _ = run_cli(capsys, "fan-check", "--preset", "P2")
        assert code == 0
        data = json.loads(out)
        assert data["pic_rank"] == 1
        assert data["q_polynomial"] == "1 - X0*X1*X2"
        assert data["class"] == {"2": "1", "1": "1", "0": "1"}
        assert data["special_value_identity"] == "verified"

    def test_malformed_json_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        code, _, err = run_cli(capsys, "fan-check", "--fan", str(path))
        assert code == 2
        assert "parse error" in err

    def test_incomplete_fan_reports_violation(self, capsys, tmp_path):
        path = tmp_path / "half.json"
        path.write_text(json.dumps({
            "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
            "max_cones": [[0, 1], [1, 2]]}))
        code, _, err = run_cli(capsys, "fan-check", "--fan", str(path))
        assert code == 2
        assert "WallConditionViolation" in err


class TestZeta:
    def test_line_both_routes_with_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--preset", "P1",
                               "--dmax", "3,3", "--route", "both",
                               "--q", "2,3")
        assert code == 0
        data = json.loads(out)
        assert data["routes_agree"] is True
        pretty = {tuple(e["d"]): e["pretty"] for e in data["coeffs"]}
        assert pretty[(0, 0)] == "L - 1"
        assert pretty[(1, 1)] == "L^3 - L"
        assert pretty[(3, 3)] == "L^7 - L^5"
        for entry in data["coeffs"]:
            for verdict in entry["oracle"].values():
                assert verdict["matches"] is True

    def test_scalar_dmax_broadcasts(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--preset", "P2",
                               "--dmax", "1", "--route", "direct",
                               "--no-oracle")
        assert code == 0
        data = json.loads(out)
        assert data["Dmax"] == [1, 1, 1]
        assert {tuple(e["d"]) for e in data["coeffs"]} == {(0, 0, 0),
                                                           (1, 1, 1)}

    def test_budget_exhaustion_exit_code(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--preset", "P1",
                               "--dmax", "2,2", "--route", "direct",
                               "--q", "3", "--budget", "5")
        assert code == 3
        data = json.loads(out)
        flat = [e["oracle"]["3"] for e in data["coeffs"]]
        assert "budget-exceeded" in flat

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--preset", "P1",
                               "--dmax", "1,1", "--route", "direct",
                               "--no-oracle", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d0,d1,coeff"
        assert "1,1,L^3 - L" in lines


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "all", "--seed", "7",
                               "--trials", "12")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "pass"
        assert {s["suite"] for s in data["suites"]} == \
            {"poisson", "fourier", "euler", "cones"}

    def test_byte_identical_reports(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "all", "--seed", "42",
                              "--trials", "25")
        _, second, _ = run_cli(capsys, "verify", "all", "--seed", "42",
                               "--trials", "25")
        assert first == second

    def test_different_seed_changes_nothing_observable_but_runs(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "poisson", "--seed", "1",
                               "--trials", "5")
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_zero_trials_vacuous_pass_with_warning(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "poisson", "--seed", "1",
                               "--trials", "0")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "pass"
        assert data["warnings"]

    def test_no_oracle_skips_field_checks(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "euler", "--seed", "3",
                               "--trials", "6", "--no-oracle")
        assert code == 0
        data = json.loads(out)
        checks = {c["name"]: c["status"]
                  for s in data["suites"] for c in s["checks"]}
        assert checks["euler-specialization-oracle"] == "skip"


class TestLeadingConstant:
    def test_line_report(self, capsys):
        code, out, _ = run_cli(capsys, "leading-constant", "--preset", "P1",
                               "--q", "5")
        assert code == 0
        data = json.loads(out)
        assert data["exact_pretty"] == "L - L^-1"
        at_five = data["specializations"][0]
        assert at_five["value_float"] == 4.8
        assert at_five["matches_1e-3"] is True

    def test_plane_precision_report(self, capsys):
        code, out, _ = run_cli(capsys, "leading-constant", "--preset", "P2",
                               "--precision", "10", "--q", "5")
        assert code == 0
        data = json.loads(out)
        assert data["specializations"][0]["relative_error"] < 1e-3

    def test_no_oracle_mode(self, capsys):
        code, out, _ = run_cli(capsys, "leading-constant", "--preset", "P2",
                               "--q", "5", "--no-oracle")
        assert code == 0
        data = json.loads(out)
        assert "closed_point_product" not in data["specializations"][0]


class TestBudgetEnv:
    def test_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("MTZ_BUDGET", "5")
        code, _, _ = run_cli(capsys, "zeta", "--preset", "P1",
                             "--dmax", "2,2", "--route", "direct",
                             "--q", "3")
        assert code == 3
