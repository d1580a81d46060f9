from __future__ import annotations

import csv
import io
import json
import random
import subprocess
import sys
import time

import pytest

from pseudoherm import cli
from pseudoherm.hparser import format, parse


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


class TestDerive:
    def test_quartic(self):
        code, text = run("derive", "--epsilon", "2")
        assert code == 0
        assert "Q = (1/3)g x^3" in text
        assert "h = p^2 + (1/4)g^2 x^4 - g x" in text
        assert "residual = 0" in text

    def test_harmonic(self):
        code, text = run("derive", "--epsilon", "1")
        assert code == 0
        assert "Q = (1/2)g x^2" in text and "h = p^2 + (1/4)g^2 x^2 - (1/2)g" in text

    def test_log_case_json(self):
        code, text = run("derive", "--epsilon", "-1", "--format", "json")
        d = json.loads(text)
        assert code == 0
        assert d["Q"] == "g ln(x)"
        assert parse(d["h"]) == parse("p^2 + 1/4*g^2*x^-2 + 1/2*g*x^-2")

    def test_wrong_metric_is_a_derivation_failure(self):
        code, _ = run("derive", "--epsilon", "2", "--inject-wrong-metric")
        assert code == cli.EXIT_DERIVATION

    def test_csv(self):
        code, text = run("derive", "--epsilon", "3", "--format", "csv")
        rows = dict(csv.reader(io.StringIO(text)))
        assert rows["Q"] == "(1/4)g x^4"


class TestParse:
    def test_json(self):
        code, text = run("parse", "{x,p}")
        d = json.loads(text)
        assert code == 0 and d["canonical"] == "2x p - (1i)"
        assert len(d["terms"]) == 2

    def test_error_is_usage(self, capsys):
        code, _ = run("parse", "x + ?")
        assert code == cli.EXIT_USAGE
        assert "byte 4" in capsys.readouterr().err


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ["bogus"],
            [],
            ["spectrum", "--N", "2"],
            ["spectrum", "--L", "0"],
            ["spectrum", "--k", "0"],
            ["spectrum", "--N", "20", "--k", "6"],
            ["spectrum", "--variant", "other"],
            ["groundstate", "--samples", "-1"],
            ["groundstate", "--g", "0"],
        ],
    )
    def test_exit_64(self, argv):
        assert run(*argv)[0] == cli.EXIT_USAGE

    def test_hidden_flag_not_in_help(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["verify", "--help"])
        assert "inject" not in capsys.readouterr().out


class TestSpectrum:
    def test_acceptance_run_csv(self):
        code, text = run("spectrum", "--epsilon", "1", "--g", "2", "--N", "4000", "--L", "10", "--k", "8", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert code == 0 and len(rows) == 8
        assert all(float(r["deviation"]) <= 1e-3 for r in rows)
        # 17 significant digits
        assert len(rows[1]["E_h"].replace(".", "").lstrip("0")) >= 16

    def test_quartic_defaults(self):
        code, text = run("spectrum", "--epsilon", "2", "--g", "1", "--format", "json")
        d = json.loads(text)
        assert code == 0
        assert min(d["eigenvalues_h"]) > 0
        assert all(im == 0.0 for _, im in d["eigenvalues_H"])

    def test_zero_coupling(self):
        code, text = run("spectrum", "--epsilon", "1", "--g", "0", "--N", "400", "--k", "5", "--format", "json")
        d = json.loads(text)
        assert code == 0 and max(d["deviations"]) < 1e-10

    def test_singular_grid_is_numeric_failure(self):
        assert run("spectrum", "--epsilon", "-1", "--N", "201", "--k", "4")[0] == cli.EXIT_NUMERIC

    def test_unresolved_drift_is_verification_failure(self, capsys):
        code, _ = run("spectrum", "--epsilon", "3", "--g", "1", "--N", "600", "--k", "5")
        assert code == cli.EXIT_VERIFICATION
        assert "hint" in capsys.readouterr().err


class TestGroundState:
    def test_gaussian(self):
        code, text = run("groundstate", "--epsilon", "1", "--g", "2", "--format", "json")
        d = json.loads(text)
        assert code == 0 and d["verdict"] == "normalizable"
        assert d["C"] == pytest.approx(0.7511, abs=1e-4)

    def test_non_normalizable(self):
        code, text = run("groundstate", "--epsilon", "2", "--g", "1")
        assert code == 0 and "verdict: non-normalizable" in text

    def test_undefined_is_not_an_error(self):
        code, text = run("groundstate", "--epsilon", "-3", "--g", "1")
        assert code == 0 and "verdict: undefined" in text

    def test_profile_csv(self):
        code, text = run("groundstate", "--epsilon", "1", "--g", "2", "--samples", "5", "--L", "2", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert code == 0 and len(rows) == 5
        assert float(rows[2]["x"]) == 0.0 and float(rows[2]["phi0"]) == pytest.approx(0.7511255444649425)


@pytest.fixture
def cheap_numerics(monkeypatch):
    monkeypatch.setattr(cli, "_check_spectral", lambda cfg: {"ok": True, "cases": {}})
    monkeypatch.setattr(cli, "_check_positivity", lambda: {"ok": True})
    monkeypatch.setattr(cli, "_check_zero_mode", lambda: {"ok": True})


class TestVerify:
    def test_default_run_passes_quickly(self):
        start = time.perf_counter()
        code, text = run("verify", "--format", "json")
        elapsed = time.perf_counter() - start
        d = json.loads(text)
        assert code == 0, {k: v["status"] for k, v in d["checks"].items()}
        assert elapsed < 60

    def test_wrong_metric_injection(self, cheap_numerics):
        code, text = run("verify", "--format", "json", "--inject-wrong-metric")
        d = json.loads(text)
        assert code == cli.EXIT_VERIFICATION
        assert d["checks"]["symbolic_metric"]["status"] == "fail"
        assert d["checks"]["parser"]["status"] == "pass"

    def test_byte_stable(self, cheap_numerics):
        a = run("verify", "--seed", "7", "--format", "json")[1]
        b = run("verify", "--seed", "7", "--format", "json")[1]
        assert a == b
        assert json.loads(a)["config"]["seed"] == 7

    def test_crashing_check_is_reported(self, cheap_numerics, monkeypatch):
        def boom():
            raise RuntimeError("no")

        monkeypatch.setattr(cli, "_check_polynomial", boom)
        code, text = run("verify")
        assert code == cli.EXIT_VERIFICATION
        assert "ERROR polynomial_eigenfunctions" in text


def test_random_operators_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        A = cli.random_operator(rng)
        assert parse(format(A)) == A


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pseudoherm", "derive", "--epsilon", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Q = (1/3)g x^3" in proc.stdout
