"""CLI surface: subcommands, formats, exit codes, determinism."""
import json
import subprocess
import sys

import pytest

from supercong import cli
from supercong.verdicts import Status, Verdict


def run_cli(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def parse_json_report(text):
    dec = json.JSONDecoder()
    records, idx = dec.raw_decode(text)
    summary, _ = dec.raw_decode(text, idx + 1)
    return records, summary


def test_list_rows(capsys):
    code, out, _ = run_cli(["list"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) > 100
    row21 = next(l for l in lines if l.startswith("2.1 |"))
    assert "mod p" in row21
    assert any(l.startswith("4.46i |") and "mod p^3" in l for l in lines)
    assert any("PROVEN" in l for l in lines)


def test_check_exit_codes(capsys):
    code, out, _ = run_cli(["check", "2.1", "--prime", "13"], capsys)
    assert code == 0
    assert "status: Holds" in out and "lhs: 3" in out and "rhs: 3" in out

    code, _, err = run_cli(["check", "2.1", "--prime", "15"], capsys)
    assert code == 2 and "prime" in err

    code, _, err = run_cli(["check", "2.1", "--prime", "169"], capsys)
    assert code == 2  # prime validation must catch squares of primes > 10

    code, _, err = run_cli(["check", "no-such", "--prime", "13"], capsys)
    assert code == 2

    code, _, err = run_cli(["check", "2.7i", "--prime", "13"], capsys)
    assert code == 2 and "q" in err

    code, _, err = run_cli(
        ["check", "2.7i", "--prime", "13", "--params", "q=junk"], capsys)
    assert code == 2

    code, out, _ = run_cli(
        ["check", "2.7i", "--prime", "13", "--params", "q=11"], capsys)
    assert code == 0


def test_check_verbose_diagnostics(capsys):
    code, out, _ = run_cli(["check", "4.14", "--prime", "5"], capsys)
    assert code == 0 and "diagnostics" not in out
    code, out, _ = run_cli(
        ["check", "4.14", "--prime", "5", "--verbose"], capsys)
    assert code == 0
    assert "diagnostics:" in out and "17" in out
    assert "branch: p = 5 mod 12" in out


def test_check_mod_exp_override(capsys):
    code, out, _ = run_cli(
        ["check", "RV1", "--prime", "13", "--mod-exp", "2"], capsys)
    assert code == 0 and "lhs: 10" in out and "modulus: 169" in out


def test_resolve_ids():
    assert cli.resolve_ids("all") is None
    assert cli.resolve_ids(None) is None
    assert cli.resolve_ids("2.2") == ["2.2i", "2.2ii"]
    assert cli.resolve_ids("4.22") == [f"4.22{c}" for c in "abcdefg"]
    assert cli.resolve_ids("T2.1,RV1") == ["T2.1", "RV1"]
    # a bare 4.2 must not pick up 4.22* or 4.25c
    assert cli.resolve_ids("4.2") == ["4.2"]
    with pytest.raises(ValueError):
        cli.resolve_ids("4.99")


def test_sweep_json_shape(capsys):
    code, out, err = run_cli(
        ["sweep", "--ids", "T2.1,RV1", "--max", "100"], capsys)
    assert code == 0
    records, summary = parse_json_report(out)
    assert set(summary) == {"holds", "fails", "notapplicable", "anomalies",
                            "wall_time"}
    assert summary["fails"] == "0" and summary["wall_time"] == ""
    assert int(summary["holds"]) > 0
    assert len(records) == sum(
        int(summary[k]) for k in ("holds", "fails", "notapplicable", "anomalies"))
    for r in records:
        assert list(r) == list(cli._FIELDS)
        assert isinstance(r["p"], str)
    assert "swept" in err


def test_sweep_formats_and_out(tmp_path, capsys):
    out_path = tmp_path / "report.csv"
    code, _, _ = run_cli(
        ["sweep", "--ids", "2.1", "--max", "200", "--format", "csv",
         "--out", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == ",".join(cli._FIELDS)
    assert lines[-1].startswith("# holds=")

    code, out, _ = run_cli(
        ["sweep", "--ids", "2.1", "--max", "200", "--format", "tsv"], capsys)
    assert out.splitlines()[0] == "\t".join(cli._FIELDS)


def test_sweep_deterministic_across_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(["sweep", "--ids", "2.1,3.5,4.14", "--max", "150", "--jobs", "1",
             "--out", str(a)], capsys)
    run_cli(["sweep", "--ids", "2.1,3.5,4.14", "--max", "150", "--jobs", "4",
             "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_sweep_usage_errors(capsys):
    code, _, err = run_cli(["sweep", "--ids", "bogus", "--max", "100"], capsys)
    assert code == 2 and "unknown statement id" in err
    code, _, _ = run_cli(
        ["sweep", "--ids", "2.1", "--min", "100", "--max", "50"], capsys)
    assert code == 2
    code, _, _ = run_cli(["sweep", "--ids", "2.1", "--max", "3000000"], capsys)
    assert code == 2


def test_sweep_exit_code_on_fails(monkeypatch, capsys):
    bad = [Verdict(id="2.1", p=13, status=Status.FAILS, lhs=1, rhs=2,
                   modulus=13)]
    monkeypatch.setattr(cli, "sweep", lambda **kw: bad)
    code, out, _ = run_cli(["sweep", "--ids", "2.1", "--max", "100"], capsys)
    assert code == 1
    _, summary = parse_json_report(out)
    assert summary["fails"] == "1"


def test_sweep_exit_code_on_anomaly(monkeypatch, capsys):
    bad = [Verdict(id="2.1", p=13, status=Status.ANOMALY)]
    monkeypatch.setattr(cli, "sweep", lambda **kw: bad)
    code, _, _ = run_cli(["sweep", "--ids", "2.1", "--max", "100"], capsys)
    assert code == 3


def test_oracle_subcommand(capsys):
    code, out, _ = run_cli(["oracle", "franel", "--max", "20"], capsys)
    assert code == 0 and "pass" in out
    code, out, _ = run_cli(["oracle", "lucas", "--max", "60"], capsys)
    assert code == 0


def test_oracle_mismatch_exit(monkeypatch, capsys):
    from supercong.reference import OracleReport

    rep = OracleReport("franel", checks=3, mismatches=["boom"])
    monkeypatch.setattr(cli, "run_suite", lambda name, bound: rep)
    code, out, _ = run_cli(["oracle", "franel"], capsys)
    assert code == 3 and "boom" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supercong.cli", "check", "2.1",
         "--prime", "13"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "status: Holds" in proc.stdout
