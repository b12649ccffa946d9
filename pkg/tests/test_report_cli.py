import json
import math
import subprocess
import sys

import pytest

from sneddon import report
from sneddon.cli import cmd_dispatch
from sneddon.report import ReportEntry, VerificationReport, emit_report, load_report, make_entry, parse_report, verify_grid


@pytest.fixture(scope="module")
def sonin_report():
    return verify_grid("sonin_suite", tol=1e-7)


def test_sonin_suite_passes(sonin_report):
    assert sonin_report.summary["failures"] == 0
    assert sonin_report.summary["count"] == len(sonin_report.entries) > 0
    assert sonin_report.summary["wall_time"] is None


def test_determinism(sonin_report):
    again = verify_grid("sonin_suite", tol=1e-7)
    assert emit_report(again) == emit_report(sonin_report)
    assert emit_report(again, "csv") == emit_report(sonin_report, "csv")


def test_round_trip(sonin_report, tmp_path):
    assert parse_report(emit_report(sonin_report)) == sonin_report
    path = tmp_path / "r.csv"
    emit_report(sonin_report, "csv", path)
    assert load_report(path).entries == sonin_report.entries


def test_round_trip_preserves_nan_entries():
    e = report._error_entry("ks", {"nu": 0.5}, ValueError("bad"))
    r = parse_report(emit_report(VerificationReport((e,), {"count": 1})))
    assert r.entries[0].params == e.params and math.isnan(r.entries[0].lhs) and r.entries[0].status == "fail"


def test_empty_report():
    text = emit_report(VerificationReport((), {"count": 0, "failures": 0}))
    assert text.startswith('{"entries":[],"summary":{')
    assert json.loads(text) == {"entries": [], "summary": {"count": 0, "failures": 0}}


def test_csv_header():
    assert emit_report(VerificationReport(), "csv").splitlines()[0] == "identity,params,lhs,rhs,abs_err,rel_err,tail,status"


def test_seventeen_digits():
    assert report.dumps(0.1) == "0.10000000000000001"
    assert report.dumps(2.0) == "2.0"
    assert report.dumps({"b": 1, "a": [1e-300, None]}) == '{"a":[1e-300,null],"b":1}'


def test_status_rule():
    assert make_entry("x", {}, 1.0, 1.0 + 1e-8, 0.0, tol=1e-7).status == "pass"
    assert make_entry("x", {}, 1.0, 1.0 + 1e-6, 0.0, tol=1e-7).status == "fail"
    assert make_entry("x", {}, 1e-14, -1e-14, 0.0, tol=1e-7, floor=1e-12).status == "pass"
    assert make_entry("x", {}, 1e-14, -1e-14, 0.0, tol=1e-7, floor=0.0).status == "fail"
    assert make_entry("x", {}, float("nan"), 1.0, 0.0, tol=1e-7).status == "fail"


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_grid("nope")


def run(argv, capsys):
    code = cmd_dispatch(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeros_command(capsys):
    code, out, _ = run(["zeros", "--nu", "0", "--count", "5", "--format", "json"], capsys)
    assert code == 0
    z = json.loads(out)
    assert len(z) == 5 and z[0] == pytest.approx(2.404825557695773, rel=1e-14)


def test_sum_command(capsys):
    code, out, _ = run(["sum", "--n", "0", "--alpha", "0.5", "--beta", "0.5", "--nu", "0.5", "--x", "0.8", "--y", "0.4", "--tol", "1e-9"], capsys)
    rec = json.loads(out)[0]
    assert code == 0 and rec["converged"] and rec["tail_estimate"] <= 1e-9
    assert rec["value"] == pytest.approx(math.sqrt(0.32) * 0.2 / 1.6, rel=1e-10)


@pytest.mark.parametrize("argv", [
    ["closed", "--alpha", "1.7", "--beta", "0.3", "--nu", "0.25", "--x", "0.9", "--y", "0.3"],
    ["closed", "--series", "S1", "--alpha", "1.7", "--nu", "0.25", "--x", "0.9"],
    ["ks", "--kind", "ksee", "--nu", "0.25", "--beta", "1.7", "--x", "0.9", "--y", "0.3", "--z", "0.5"],
    ["ks", "--kind", "ks1r", "--nu", "-0.25", "--x", "0.6", "--z", "0.3"],
    ["sonin", "--mu", "1.3", "--eta", "0.2", "--x", "1.5"],
    ["sonin", "--mu", "1.3", "--eta", "0.2", "--r", "2.5", "--x", "1.5", "--format", "csv"],
    ["pfrac", "--alpha", "0.3", "--beta", "1.7", "--nu", "0.25", "--x", "0.9", "--y", "0.3", "--t", "0.37", "--n", "1"],
    ["pfrac", "--f", "phi2", "--nu", "0.25", "--n", "2", "--t", "2.1"],
])
def test_value_commands(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0 and out


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["sum", "--alpha", "0.5"],
    ["sum", "--n", "0", "--alpha", "0.5", "--beta", "0.5", "--nu", "3", "--x", "0.5", "--y", "0.5"],
    ["zeros", "--nu", "-1.5"],
    ["ks", "--kind", "ksee", "--x", "0.5", "--y", "0.2"],
    ["sum", "--config", "/nonexistent/cfg.json", "--alpha", "0.5"],
    ["zeros", "--format", "xml"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["verify", "--suite", "sonin_suite", "--tol", "1e-7", "--out", str(out)], capsys)[0] == 0
    assert load_report(out).summary["failures"] == 0
    # an unattainable tolerance turns entries red and the exit code to 1
    assert run(["verify", "--suite", "sonin_suite", "--tol", "1e-30", "--out", str(out)], capsys)[0] == 1


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nu": 0.5, "count": 3, "format": "csv"}))
    code, out, _ = run(["zeros", "--config", str(cfg)], capsys)
    assert code == 0 and len(out.splitlines()) == 4 and out.startswith("m,zero,weight")
    code, out, _ = run(["zeros", "--config", str(cfg), "--count", "2", "--format", "json"], capsys)
    assert json.loads(out) == pytest.approx([math.pi, 2 * math.pi], rel=1e-14)
    code, out, _ = run(["zeros"], capsys)
    assert len(json.loads(out)) == 10


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "sneddon", "zeros", "--nu", "0.5", "--count", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)[0] == pytest.approx(math.pi, rel=1e-14)
