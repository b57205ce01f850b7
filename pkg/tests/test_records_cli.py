import json
import subprocess
import sys

import pytest

from dlthroughput import cli, records, sweeps
from dlthroughput.params import TABLES_ENV_VAR, default_table_path


def run(*argv):
    return subprocess.run([sys.executable, "-m", "dlthroughput", *argv], capture_output=True, text=True)


@pytest.fixture(scope="module")
def small_sweep():
    return sweeps.sweep([8], [0.0, 1e-5], [512], flavors=["MU_AX(8)", "SU_AC"], mcs=[3, 9, 11])


def test_sweep_rows(small_sweep):
    # SU_AC has no MCS11, MU_AX(8) has 4 variants
    assert len(small_sweep) == (4 * 3 + 1 * 2) * 2
    r = small_sweep[0]
    assert r.flavor == "8*SU_AC(1)" and r.access_delay_us == pytest.approx(8 * r.cycle_us, abs=0.1)


def test_csv_round_trip(small_sweep):
    text = records.to_csv(small_sweep)
    assert text.splitlines()[0] == ",".join(records.header(records.SweepRecord))
    back = records.from_csv(text, records.SweepRecord)
    assert back == small_sweep
    assert records.to_csv(back) == text


def test_json_round_trip(small_sweep):
    text = records.to_json(small_sweep)
    assert records.from_json(text, records.SweepRecord) == small_sweep


def test_mpdu_count_round_trip():
    recs = sweeps.fig7()[:50]
    assert records.from_csv(records.to_csv(recs), records.MpduCountRecord) == recs


def test_bad_header():
    with pytest.raises(ValueError):
        records.from_csv("a,b\n1,2\n", records.SweepRecord)


def test_eval_text(capsys):
    assert cli.main(["eval", "--std", "ac", "--flavor", "su", "--mcs", "9", "--ber", "0", "--msdu", "1500"]) == 0
    out = capsys.readouterr().out
    assert "throughput_mbps    742.2" in out
    assert "t_back_total_us" in out and "y_profile" in out


def test_eval_json_and_plan(capsys):
    assert cli.main(["eval", "--std", "ax", "--flavor", "mu", "--n", "4", "--mcs", "11",
                     "--window", "256", "--plan", "72*7+3*6", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["msdus_per_ampdu"] == 522 and out["cycle_us"] == 5596.9


def test_eval_unavailable(capsys):
    assert cli.main(["eval", "--std", "ax", "--flavor", "mu", "--n", "64", "--mcs", "11"]) == 1
    assert "MCS11 unavailable at n=64" in capsys.readouterr().err


def test_eval_bad_flags():
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval", "--std", "bx", "--flavor", "su", "--mcs", "1"])
    assert exc.value.code != 0


def test_eval_infeasible_plan(capsys):
    assert cli.main(["eval", "--std", "ac", "--flavor", "su", "--mcs", "0", "--plan", "64*7"]) == 1
    assert "error:" in capsys.readouterr().err


def test_validate_tables(tmp_path, capsys):
    assert cli.main(["validate-tables"]) == 0
    assert "PASS" in capsys.readouterr().out
    lines = default_table_path().read_text().splitlines(keepends=True)
    bad = tmp_path / "bad.csv"
    bad.write_text("".join(l.replace("AX,SU,DL_DATA,1,5,576.5", "AX,SU,DL_DATA,1,5,400.0") for l in lines))
    assert cli.main(["validate-tables", str(bad)]) == 1
    assert "rate decreases from MCS4" in capsys.readouterr().err
    short = tmp_path / "short.csv"
    short.write_text("".join(l for l in lines if ",64," not in l))
    assert cli.main(["validate-tables", str(short)]) == 1
    assert "missing entry for AX/MU/DL_DATA/n=64/MCS0" in capsys.readouterr().err
    assert cli.main(["validate-tables", str(tmp_path / "nope.csv")]) == 1


def test_tables_flag(tmp_path, monkeypatch, capsys):
    lines = default_table_path().read_text().splitlines(keepends=True)
    alt = tmp_path / "alt.csv"
    alt.write_text("".join(lines) + "garbage line\n")
    # registered so teardown undoes the CLI's own assignment
    monkeypatch.setenv(TABLES_ENV_VAR, str(default_table_path()))
    assert cli.main(["--tables", str(alt), "eval", "--std", "ac", "--flavor", "su", "--mcs", "9"]) == 1
    assert "line" in capsys.readouterr().err


def test_sweep_to_file(tmp_path):
    out = tmp_path / "s.json"
    rc = cli.main(["sweep", "--stations", "4", "--flavors", "MU_AC", "--mcs", "9", "--format", "json",
                   "-o", str(out)])
    assert rc == 0
    (rec,) = records.from_json(out.read_text(), records.SweepRecord)
    assert rec.flavor == "1*MU_AC(4)" and rec.throughput_mbps == pytest.approx(2826.5)


def test_approx(capsys):
    assert cli.main(["approx", "--n", "64", "--mcs", "9", "--ber", "0", "--msdu", "1500"]) == 0
    line = capsys.readouterr().out.splitlines()[1]
    assert line.startswith("64,9,0.0,1500,7.000,3.167,7,3,3,")


def test_module_entry_and_hidden_mc():
    r = run("--help")
    assert r.returncode == 0 and "fig7" in r.stdout and " mc " not in r.stdout
    r = run("mc", "--plan", "1*1", "--ber", "0", "--trials", "10")
    assert r.returncode == 0 and r.stdout.startswith("mean=12000.000")
