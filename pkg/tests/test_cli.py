import json
import os

import numpy as np
import pytest

from gausskern.approx import GaussianTarget, approximate, approx_from_json
from gausskern.cli import RULE_CACHE_ENV, main
from gausskern.errors import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_approx_stdout_json(capsys):
    code, out, _ = run(capsys, "approx", "--sigma", "0.8", "--rho", "1",
                       "--n", "6")
    assert code == 0
    ap = approx_from_json(out)
    ref = approximate(GaussianTarget(0.8, 1.0), 6)
    assert np.allclose(ap.freqs, ref.freqs, rtol=1e-15)
    assert np.allclose(ap.coeffs, ref.coeffs, rtol=1e-15)


def test_approx_multi_N_writes_directory(tmp_path, capsys):
    outdir = tmp_path / "runs"
    code, _, _ = run(capsys, "approx", "--sigma", "1", "--rho", "1",
                     "--n-min", "2", "--n-max", "4", "--out", str(outdir))
    assert code == 0
    for N in (2, 3, 4):
        path = outdir / f"approx_N{N}.json"
        assert path.exists()
        assert json.loads(path.read_text())["N"] == N


def test_approx_pencil_matches_hermite(capsys):
    code, out, _ = run(capsys, "approx", "--sigma", "0.8", "--rho", "1",
                       "--method", "pencil", "--n", "6")
    assert code == 0
    ap = approx_from_json(out)
    ref = approximate(GaussianTarget(0.8, 1.0), 6)
    assert np.allclose(ap.freqs, ref.freqs, atol=1e-10)


def test_approx_pencil_breakdown_exit_2(capsys):
    code, _, err = run(capsys, "approx", "--sigma", "1", "--rho", "0.5",
                       "--method", "pencil", "--n", "15")
    assert code == 2
    assert "N=15" in err


def test_approx_prony_small_N(capsys):
    code, out, _ = run(capsys, "approx", "--sigma", "1", "--rho", "0.5",
                       "--method", "prony", "--n", "4")
    assert code == 0
    ap = approx_from_json(out)
    assert ap.N == 4


def test_error_table_csv_ordering(capsys):
    code, out, _ = run(capsys, "error-table", "--sigma", "0.8", "--rho", "1",
                       "--n-min", "2", "--n-max", "4",
                       "--method", "hermite,prony")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    keys = [(row.split(",")[3], int(row.split(",")[2])) for row in lines[1:]]
    assert keys == [("hermite", 2), ("hermite", 3), ("hermite", 4),
                    ("prony", 2), ("prony", 3), ("prony", 4)]


def test_error_table_trunc_columns_for_half_r(capsys):
    code, out, _ = run(capsys, "error-table", "--sigma", "1", "--rho", "0.5",
                       "--n-min", "3", "--n-max", "3")
    assert code == 0
    row = out.strip().split("\n")[1].split(",")
    truncT, trunc_error = row[7], row[8]
    assert float(truncT) > 0 and float(trunc_error) > 0


def test_error_table_json_format(capsys):
    code, out, _ = run(capsys, "error-table", "--sigma", "1", "--rho", "1",
                       "--n-min", "2", "--n-max", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert rows[0]["method"] == "hermite"
    assert float(rows[0]["weighted_error"]) > float(rows[1]["weighted_error"])


def test_error_table_unknown_method(capsys):
    code, _, err = run(capsys, "error-table", "--sigma", "1", "--rho", "1",
                       "--n-min", "2", "--n-max", "3", "--method", "esprit")
    assert code == 1
    assert "esprit" in err


def test_empty_n_range_usage_error(capsys):
    code, _, err = run(capsys, "approx", "--sigma", "1", "--rho", "1",
                       "--n-min", "5", "--n-max", "3")
    assert code == 1
    assert "range" in err


def test_truncated_requires_T(capsys):
    code, _, err = run(capsys, "approx", "--sigma", "1", "--rho", "1",
                       "--n", "4", "--method", "pencil_truncated")
    assert code == 1
    assert "truncation-T" in err


def test_bound_check_defaults_pass(capsys):
    code, out, _ = run(capsys, "bound-check")
    assert code == 0
    assert out.count("PASS") == 4


def test_bound_check_large_r_marks_na(capsys):
    code, out, _ = run(capsys, "bound-check", "--sigma", "1", "--rho", "6",
                       "--check", "decay")
    assert code == 0
    assert "N/A" in out


def test_bound_check_mn_table(capsys):
    code, out, _ = run(capsys, "bound-check", "--check", "mn",
                       "--n-max", "20")
    assert code == 0
    assert "N= 20" in out or "N=20" in out.replace(" ", "")


def test_rule_cache_env(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "rules.txt"
    monkeypatch.setenv(RULE_CACHE_ENV, str(cache))
    code, _, _ = run(capsys, "approx", "--sigma", "1", "--rho", "1",
                     "--n", "5")
    assert code == 0
    assert cache.exists()
    first = cache.read_text()
    assert len(first.strip().split("\n")) == 5
    # second run reuses the cache without rewriting it
    mtime = os.path.getmtime(cache)
    code, _, _ = run(capsys, "approx", "--sigma", "2", "--rho", "3",
                     "--n", "5")
    assert code == 0
    assert cache.read_text() == first


def test_usage_error_from_argparse(capsys):
    assert main(["approx", "--sigma", "1"]) == 1
    capsys.readouterr()
