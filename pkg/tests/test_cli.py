import argparse
import csv
from fractions import Fraction
import io
import json
import math

import pytest

from app.cli.main import main, parse_config
from app.cli.report import flatten_row, render_csv, to_plain
from app.cli.utils import EXIT_DOMAIN_ERROR, EXIT_USAGE, frange, handle_errors, parse_complex, parse_pair
from app.errors import NotInCone
from app.series.explorer import Verdict


def _run(capsys, argv: list[str]) -> tuple[int, str, str]:
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_constant_term_json(capsys):
    code, out, _ = _run(capsys, ["constant-term", "--m", "3", "--nu", "3,3", "--a", "2,2", "--max-length", "20"])
    assert code == 0
    report = json.loads(out)
    assert report["converged"] is True
    assert report["terms_used"] == 41
    assert report["bands"][0]["re"] == pytest.approx(1 / 64)


def test_output_is_deterministic(capsys):
    argv = ["constant-term", "--nu", "3.2,3", "--a", "2,1.8", "--max-length", "12"]
    _, first, _ = _run(capsys, argv)
    _, second, _ = _run(capsys, argv + ["--workers", "3"])
    assert first == second


def test_weyl_action_oracle(capsys):
    code, out, _ = _run(capsys, ["weyl", "--m", "4", "--action", "--max-length", "10"])
    assert code == 0
    report = json.loads(out)
    assert report["all_ok"] is True
    assert len(report["rows"]) == 21


def test_roots_csv(capsys):
    code, out, _ = _run(capsys, ["roots", "--bound", "10", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "c1,c2,norm,real"
    assert len(lines) == 7


def test_godement_violation_exit_code(capsys):
    code, out, err = _run(capsys, ["constant-term", "--nu", "2,2", "--a", "2,2"])
    assert code == EXIT_DOMAIN_ERROR
    assert out == ""
    record = json.loads(err.strip().splitlines()[-1])
    assert record["code"] == "godement_violation"
    assert record["context"]["pairings"][0] == {"re": -2.0, "im": 0.0}


def test_invalid_m_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["roots", "--m", "2"])
    assert exc.value.code == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["constant-term", "--nu", "3,3"],
        ["constant-term", "--nu", "3", "--a", "2,2"],
        ["fourier", "--i", "3", "--nu", "3,3", "--a", "2,2"],
        ["scan", "--s-from", "-3", "--s-to", "-2", "--step", "0", "--a", "2,2"],
        ["bogus"],
    ],
)
def test_bad_flags_exit_with_usage_code(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_USAGE


def test_fourier_csv_header(capsys):
    code, out, _ = _run(capsys, ["fourier", "--nu", "3,3", "--a", "2,2", "--format", "csv", "--max-length", "10"])
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert "value_re" in header and "value_im" in header


def test_fourier_degenerate_character(capsys):
    code, _, err = _run(capsys, ["fourier", "--n", "0", "--nu", "3,3", "--a", "2,2"])
    assert code == EXIT_DOMAIN_ERROR
    assert json.loads(err.strip().splitlines()[-1])["code"] == "degenerate_character"


def test_fourier_generic_is_zero(capsys):
    code, out, _ = _run(capsys, ["fourier", "--generic", "--nu", "3,3", "--a", "2,2"])
    assert code == 0
    assert json.loads(out)["value"] == {"re": 0.0, "im": 0.0}


def test_cuspidal_outside_theorem_region(capsys):
    code, _, err = _run(capsys, ["cuspidal", "--s", "-1.5", "--a", "2,2"])
    assert code == EXIT_DOMAIN_ERROR
    assert json.loads(err.strip().splitlines()[-1])["code"] == "outside_theorem_region"


def test_cuspidal_reports_constants(capsys):
    code, out, _ = _run(capsys, ["cuspidal", "--s", "-3", "--a", "2,2"])
    assert code == 0
    report = json.loads(out)
    assert report["converged"] is True
    assert report["iwasawa_D"] == pytest.approx(math.sqrt(5))
    assert report["convergence_threshold"] == pytest.approx(-1.3819660113)


def test_cuspidal_scan(capsys):
    argv = ["scan", "--cuspidal", "--s-from", "-3", "--s-to", "-2.5", "--step", "0.5", "--a", "2,2", "--format", "csv"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:2] == ["point", "verdict"]
    assert [line.split(",")[1] for line in lines[1:]] == ["Decaying", "Decaying"]


def test_cuspidal_scan_marks_poles(capsys):
    argv = ["scan", "--cuspidal", "--s-from", "-2.5", "--s-to", "-1.0", "--step", "0.1", "--a", "2,2", "--format", "csv"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    rows = {round(float(row["point"]), 6): row for row in csv.DictReader(io.StringIO(out))}
    assert len(rows) == 16
    # ξ(1) 의 극: α₂, (3, 8), (21, 55)
    for s in (-2.0, -1.5, -1.4):
        assert rows[s]["verdict"] == "Stalling"
        assert rows[s]["note"]


def test_constant_term_large_m_long_truncation(capsys):
    argv = ["constant-term", "--m", "40", "--nu", "3,3", "--a", "2,2", "--max-length", "200"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    report = json.loads(out)
    assert report["converged"] is True
    assert report["terms_used"] == 401
    assert report["band_log_max"][-1] == "-inf"


def test_json_keeps_non_finite_values(capsys):
    code, out, _ = _run(capsys, ["fourier", "--nu", "3,3", "--a", "2,2", "--max-length", "10"])
    assert code == 0
    logs = [float(x) for x in json.loads(out)["band_log_max"]]
    # 항등원은 ψ_{1,n} 계수에 기여하지 않는다
    assert logs[0] == -math.inf
    assert all(math.isfinite(x) for x in logs[1:])


def test_rel_tol_from_env(monkeypatch):
    monkeypatch.setenv("EISEN_REL_TOL", "1e-8")
    config = parse_config(["roots"])
    assert config.rel_tol == 1e-8
    assert parse_config(["roots", "--rel-tol", "1e-6"]).rel_tol == 1e-6


def test_parse_config_collects_params():
    config = parse_config(["cuspidal", "--s=-3,0.5", "--a", "2,2", "--force"])
    assert config.command == "cuspidal"
    assert config.params == {"s": complex(-3, 0.5), "a": (2.0, 2.0), "force": True}


# --- 유틸리티 ---


def test_parse_helpers():
    assert parse_pair("3, 3.5") == (3.0, 3.5)
    assert parse_complex("-2") == complex(-2, 0)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_pair("1,2,3")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex("a,b")


def test_frange_includes_endpoint():
    assert frange(-3.0, -2.0, 0.25) == [-3.0, -2.75, -2.5, -2.25, -2.0]
    assert frange(-2.5, -1.0, 0.1)[-1] == -1.0
    with pytest.raises(ValueError):
        frange(0.0, 1.0, 0.0)


def test_handle_errors_returns_exit_code(capsys):
    @handle_errors(exit_code=5, log_error=False)
    def failing() -> int:
        raise NotInCone("밖", a=[1.0, 1.0])

    assert failing() == 5
    assert json.loads(capsys.readouterr().err)["context"] == {"a": [1.0, 1.0]}


def test_to_plain():
    assert to_plain(complex(1, -2)) == {"re": 1.0, "im": -2.0}
    assert to_plain(float("inf")) == "inf"
    assert to_plain(complex(float("-inf"), 0)) == {"re": "-inf", "im": 0.0}
    assert to_plain(Fraction(-3, 1)) == -3
    assert to_plain(Fraction(1, 4)) == 0.25
    assert to_plain(Verdict.GROWING) == "Growing"
    assert to_plain((1, [2.5, complex(0, 1)])) == [1, [2.5, {"re": 0.0, "im": 1.0}]]


def test_flatten_row_and_csv():
    row = {"value": complex(0.5, 0), "ok": True, "roots": [1, 2], "missing": None}
    assert flatten_row(row) == {"value_re": "0.5", "value_im": "0", "ok": "true", "roots": "1;2", "missing": ""}
    assert render_csv([row]).splitlines()[0] == "value_re,value_im,ok,roots,missing"
