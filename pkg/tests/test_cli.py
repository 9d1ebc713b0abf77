"""Integration tests for the command-line interface (exit codes, formats)."""

import json
import math
import subprocess
import sys

CMD = [sys.executable, "-m", "projheat"]


def run(*args, **kwargs):
    return subprocess.run(CMD + list(args), capture_output=True, text=True, **kwargs)


class TestEval:
    def test_hpn_stationary(self):
        res = run("eval", "--space", "hpn", "--n", "1", "--t", "50", "--d", "0.3")
        assert res.returncode == 0
        value = float(res.stdout.splitlines()[0].split()[1])
        assert abs(value - 6.0 / math.pi**2) <= 1e-10

    def test_cpn_stationary(self):
        res = run("eval", "--space", "cpn", "--n", "1", "--t", "50", "--d", "0.1")
        assert res.returncode == 0
        value = float(res.stdout.splitlines()[0].split()[1])
        assert abs(value - 1.0 / math.pi) <= 1e-10

    def test_negative_time_is_usage_error(self):
        res = run("eval", "--t", "-1", "--d", "0.3")
        assert res.returncode == 2
        assert "t" in res.stderr and "range" in res.stderr

    def test_distance_out_of_range(self):
        res = run("eval", "--t", "0.5", "--d", "1.6")
        assert res.returncode == 2

    def test_unreachable_tolerance_is_exit_3(self):
        # roundoff keeps successive quadrature estimates from ever agreeing
        # to 1e-30 at these parameters, so the node cap is reached
        res = run("eval", "--space", "hpn", "--n", "2", "--t", "0.001", "--d", "1.0",
                  "--method", "integral", "--tol", "1e-30")
        assert res.returncode == 3
        assert "convergence" in res.stderr.lower()

    def test_json_format(self):
        res = run("eval", "--t", "0.5", "--d", "0.3", "--format", "json")
        assert res.returncode == 0
        rec = json.loads(res.stdout)
        assert rec["method"] == "series" and rec["value"] > 0

    def test_both_methods(self):
        res = run("eval", "--t", "0.5", "--d", "0.3", "--method", "both",
                  "--format", "json")
        rec = json.loads(res.stdout)
        assert abs(rec["value_series"] - rec["value_integral"]) == rec["abs_diff"]
        assert rec["abs_diff"] <= 1e-8


class TestTable:
    def test_grid_cardinality_and_header(self):
        res = run("table", "--space", "cpn", "--t-grid", "0.2:0.5:2",
                  "--d-grid", "0:0.8:2", "--format", "csv")
        assert res.returncode == 0
        lines = res.stdout.strip().splitlines()
        assert lines[0] == "k,n,t,d,method,value,est_error,terms_or_nodes"
        assert len(lines) == 1 + 4

    def test_deterministic_output(self):
        args = ("table", "--space", "hpn", "--t-grid", "0.2:1:3",
                "--d-grid", "0:1.2:4", "--format", "csv")
        first = run(*args)
        second = run(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode == 0

    def test_row_order_is_t_major(self):
        res = run("table", "--space", "cpn", "--t-grid", "0.2:0.5:2",
                  "--d-grid", "0:0.8:2", "--format", "csv")
        rows = [line.split(",") for line in res.stdout.strip().splitlines()[1:]]
        ts = [float(r[2]) for r in rows]
        ds = [float(r[3]) for r in rows]
        assert ts == sorted(ts)
        assert ds[0] < ds[1] and ds[2] < ds[3]

    def test_both_adds_diff_column(self):
        res = run("table", "--space", "cpn", "--t-grid", "0.3:0.6:2",
                  "--d-grid", "0.2:0.9:2", "--method", "both", "--format", "csv")
        lines = res.stdout.strip().splitlines()
        assert lines[0] == "k,n,t,d,method,value_series,value_integral,abs_diff"
        for line in lines[1:]:
            parts = line.split(",")
            vs, vi, diff = float(parts[5]), float(parts[6]), float(parts[7])
            assert diff == abs(vs - vi)

    def test_out_file(self, tmp_path):
        target = tmp_path / "table.csv"
        res = run("table", "--t", "0.5", "--d", "0.4", "--format", "csv",
                  "--out", str(target))
        assert res.returncode == 0
        assert target.read_text().startswith("k,n,t,d,method")


class TestCompare:
    def test_default_grid_passes(self):
        res = run("compare", "--space", "hpn", "--n", "1", "--t-grid", "0.2:1:3",
                  "--d-grid", "0:1.2:4", "--tol", "1e-8")
        assert res.returncode == 0
        assert "FAIL" not in res.stdout

    def test_sub_roundoff_tolerance_fails(self):
        res = run("compare", "--space", "hpn", "--n", "1", "--t-grid", "0.2:1:2",
                  "--d-grid", "0:1.2:3", "--tol", "1e-16")
        assert res.returncode == 1
        assert "FAIL" in res.stdout

    def test_json_reports(self):
        res = run("compare", "--space", "cpn", "--n", "2", "--t", "0.5",
                  "--d-grid", "0:1:3", "--format", "json")
        assert res.returncode == 0
        for line in res.stdout.strip().splitlines():
            rec = json.loads(line)
            assert rec["identity"] == "representation_equivalence"
            assert rec["passed"]

    def test_largest_quaternionic_space(self):
        res = run("compare", "--space", "hpn", "--n", "3", "--t-grid", "0.1:0.5:2",
                  "--d-grid", "0:1.4:4", "--tol", "1e-8")
        assert res.returncode == 0


class TestSelftest:
    def test_only_lemma(self):
        res = run("selftest", "--only", "lemma")
        assert res.returncode == 0
        body = res.stdout.strip().splitlines()
        assert all(line.startswith("PASS") for line in body[:-1])
        assert "gegenbauer_ladder_to_jacobi" in res.stdout

    def test_json_reports(self):
        res = run("selftest", "--only", "theta2", "--json")
        assert res.returncode == 0
        for line in res.stdout.strip().splitlines():
            rec = json.loads(line)
            assert rec["passed"] is True

    def test_zero_tolerance_fails(self):
        res = run("selftest", "--only", "theta2", "--tol", "0")
        assert res.returncode == 1

    def test_unknown_group_is_usage_error(self):
        res = run("selftest", "--only", "nonexistent_group")
        assert res.returncode == 2

    def test_bad_flag_is_usage_error(self):
        res = run("eval", "--space", "qpn", "--t", "0.5", "--d", "0.1")
        assert res.returncode == 2
