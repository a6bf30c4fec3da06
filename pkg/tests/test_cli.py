import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from dyadic_transforms import __version__
from dyadic_transforms.cli import fmt_complex, fmt_gaussian, fmt_real, main, run_checks
from dyadic_transforms.dyadic import dyadic_matrix


def run(*args):
    return subprocess.run([sys.executable, "-m", "dyadic_transforms", *args], capture_output=True, text=True)


def body(text):
    return [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]


class TestFormatting:
    def test_real(self):
        assert fmt_real(0.1 + 0.2) == "0.3"
        assert fmt_real(-0.0) == "0"
        assert fmt_real(3) == "3"
        assert fmt_real(float("inf")) == "inf"
        assert fmt_real(None) == ""

    def test_complex(self):
        assert fmt_complex(1 - 0.5j) == "1-0.5i"
        assert fmt_complex(2) == "2+0i"

    def test_gaussian(self):
        assert fmt_gaussian(1, -1) == "1-1i"
        assert fmt_gaussian(0, 2) == "0+2i"


class TestMatrix:
    def test_cosine_numerators(self, capsys):
        assert main(["matrix", "--kind", "cosine", "--n", "8", "--m", "0"]) == 0
        rows = body(capsys.readouterr().out)
        np.testing.assert_array_equal(np.array(rows, dtype=int), dyadic_matrix("cosine", 8, 0).re)

    def test_fourier_gaussian(self, capsys):
        main(["matrix", "--kind", "fourier", "--n", "8", "--m", "1"])
        out = capsys.readouterr().out
        assert "# denominator=2" in out
        assert body(out)[1][:3] == ["2+0i", "1-1i", "0-2i"]

    def test_exact(self, capsys):
        main(["matrix", "--kind", "hartley", "--n", "4", "--exact"])
        rows = body(capsys.readouterr().out)
        np.testing.assert_allclose(np.array(rows, dtype=float), 0.5 * np.array([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]))

    def test_forward_polar_json(self, capsys):
        main(["matrix", "--kind", "cosine", "--n", "8", "--m", "2", "--mode", "polar", "--format", "json"])
        doc = json.loads(capsys.readouterr().out)
        U = np.array(doc["rows"], dtype=float)
        assert doc["matrix"] == "forward-polar"
        assert np.linalg.norm(U @ U.T - np.eye(8)) < 1e-8

    def test_header(self, capsys):
        main(["matrix", "--kind", "cosine", "--n", "4", "--m", "0", "--header"])
        assert capsys.readouterr().out.startswith(f"# dyadic-transforms {__version__}\n")

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "m.csv"
        assert main(["matrix", "--kind", "cosine", "--n", "4", "--m", "0", "--out", str(path)]) == 0
        assert capsys.readouterr().out == ""
        assert path.read_text().startswith("# kind=cosine")


class TestTables:
    def test_alpha(self, capsys):
        main(["tables", "alpha"])
        rows = body(capsys.readouterr().out)
        assert rows[0] == ["m", "alpha", "reference", "abs_dev"]
        assert float(rows[1][1]) == pytest.approx(1.14556, abs=1e-5)
        assert rows[-1][0] == "inf"

    def test_beta_single_kind(self, capsys):
        main(["tables", "beta", "--kind", "cosine"])
        rows = body(capsys.readouterr().out)
        assert len(rows) == 1 + 9 * 6
        assert {r[0] for r in rows[1:]} == {"cosine"}

    def test_condition(self, capsys):
        main(["tables", "condition", "--max-n", "64"])
        out = capsys.readouterr().out
        rows = body(out)[1:]
        assert "# blocklengths=powers-of-two" in out
        assert len(rows) == 6 * 7 * 3
        assert max(float(r[3]) for r in rows) <= 2.9432

    def test_dct_metrics(self, capsys):
        main(["tables", "dct-metrics"])
        rows = body(capsys.readouterr().out)
        exact = rows[-1]
        assert exact[0] == "inf"
        assert float(exact[7]) == pytest.approx(8.8259, abs=1e-3)

    def test_dct_metrics_polar(self, capsys):
        main(["tables", "dct-metrics-polar", "--format", "json"])
        doc = json.loads(capsys.readouterr().out)
        assert doc["rows"][0][0] == 0
        assert len(doc["rows"]) == 9


class TestFreqresp:
    def test_dc_free_row(self, capsys):
        main(["freqresp", "--kind", "cosine", "--n", "8", "--m", "0", "--row", "3", "--points", "9"])
        rows = body(capsys.readouterr().out)
        assert rows[0] == ["frequency", "magnitude"]
        assert len(rows) == 10
        assert float(rows[1][1]) == 0

    def test_row_range(self, capsys):
        assert main(["freqresp", "--kind", "cosine", "--n", "8", "--m", "0", "--row", "8"]) == 2
        assert "--row" in capsys.readouterr().err


class TestVerify:
    def test_clean(self):
        results = run_checks()
        assert all(c.passed for c in results), [c for c in results if not c.passed]

    def test_fault_detected(self):
        failed = [c.name for c in run_checks(fault=True) if not c.passed]
        assert failed == ["h16-transcription"]

    def test_single_check(self, capsys):
        assert main(["verify", "--check", "h8-inverse"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == ["PASS h8-inverse: squarewave=True", "1/1 checks passed"]


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["matrix", "--kind", "walsh", "--n", "4", "--m", "0"],
            ["matrix", "--kind", "cosine", "--n", "0", "--m", "0"],
            ["matrix", "--kind", "cosine", "--n", "8"],
            ["matrix", "--kind", "cosine", "--n", "2048", "--m", "0"],
            ["matrix", "--kind", "cosine", "--n", "8", "--m", "13"],
            ["tables", "condition", "--max-n", "4096"],
            ["tables", "nope"],
            ["freqresp", "--kind", "cosine", "--n", "8", "--m", "0", "--row", "1", "--points", "1"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == 2
        assert capsys.readouterr().err.startswith("dyadic-transforms: error:")

    def test_subprocess_codes(self):
        assert run("verify").returncode == 0
        assert run("verify", "--inject-fault").returncode == 1
        assert run("matrix").returncode == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ["matrix", "--kind", "fourier", "--n", "16", "--m", "3"],
            ["matrix", "--kind", "hartley", "--n", "8", "--m", "2", "--mode", "beta", "--format", "json"],
            ["tables", "alpha"],
            ["tables", "beta", "--kind", "hartley"],
            ["tables", "dct-metrics"],
            ["tables", "condition", "--max-n", "32"],
            ["freqresp", "--kind", "fourier", "--n", "8", "--m", "1", "--row", "2"],
            ["verify"],
        ],
    )
    def test_byte_identical(self, args):
        a, b = run(*args), run(*args)
        assert a.returncode == b.returncode
        assert a.stdout == b.stdout and a.stdout
