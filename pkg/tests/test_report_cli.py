import csv
import hashlib
import io
import math
import subprocess
import sys

import pytest

from wonglab import catalog as cat
from wonglab import report as rp
from wonglab.cli import main

SMALL = """\
# tiny sweep over every suite
N = 512
orders = (1, 2)
q = 2, inf
R = 2, 8
catalog = gaussian, hermite1
random_count = 2
"""


def _cfg(text=SMALL, **kw):
    return rp.with_overrides(rp.parse_config(text), **kw)


def test_parse_defaults():
    cfg = rp.parse_config("")
    assert cfg == rp.RunConfig()
    assert (cfg.n, cfg.N, cfg.T) == (1, 4096, 40.0)
    assert cfg.q == (1, 2, 4, math.inf)
    assert cfg.suites == rp.SUITES
    assert cfg.catalog == tuple(cat.NAMED)


def test_parse_values():
    cfg = rp.parse_config("q = 1, 2.5, INF  # comment\norders = (0.5,1), (1, 3)\nsuites = wong-sweep\n")
    assert cfg.q == (1.0, 2.5, math.inf)
    assert cfg.orders == ((0.5, 1.0), (1.0, 3.0))
    assert cfg.suites == ("wong-sweep",)
    assert rp.parse_config("suites = none").suites == ()
    assert rp.parse_config("catalog = all").catalog == tuple(cat.NAMED)


@pytest.mark.parametrize("text,needle", [
    ("orders = (2, 1)", "orders: (2,1) requires 0 < s < t"),
    ("q = 0.5", "q:"),
    ("R = 8, 2", "R:"),
    ("mollifier = box", "mollifier:"),
    ("catalog = gaussian, nope", "catalog:"),
    ("random_count = -1", "random_count:"),
    ("suites = everything", "suites:"),
    ("seed = -3", "seed:"),
    ("\n\nwobble = 3", "line 3: unknown key 'wobble'"),
    ("seed = 1\nseed = 2", "line 2: duplicate key 'seed'"),
    ("# ok\nnot a pair", "line 2: expected"),
    ("N = 10.5", "line 1: bad value for 'N'"),
    ("orders = 1, 2", "line 1: bad value for 'orders'"),
    ("N = 1", "N"),
])
def test_parse_errors(text, needle):
    with pytest.raises(rp.ConfigError) as info:
        rp.parse_config(text)
    assert needle in str(info.value)


def test_empty_suites_report():
    report = rp.run_suites(_cfg(suites=()))
    assert report.passed and report.rows == {}
    assert report.summary().strip() == "PASS"


def test_default_row_count():
    cfg = rp.RunConfig(N=512, random_count=2, suites=(rp.WONG_SWEEP,))
    report = rp.run_suites(cfg)
    expected = len(cfg.orders) * len(cfg.R) * (len(cat.NAMED) + 2) * len(cfg.q)
    assert len(report.rows[rp.WONG_SWEEP]) == expected
    assert report.passed


def test_suite_row_counts():
    cfg = _cfg()
    report = rp.run_suites(cfg)
    assert report.passed, report.failures
    fields = len(cfg.catalog) + cfg.random_count
    assert len(report.rows[rp.GROUP_LAW]) == fields * len(rp.GROUP_LAW_PAIRS)
    assert len(report.rows[rp.KERNEL_MASS]) == len(rp.KERNEL_MASS_ORDERS)
    assert len(report.rows[rp.CONSTANTS_SWEEP]) == len(cfg.R)
    assert len(report.rows[rp.QUASINORM]) == len(cfg.R) * 2 * cfg.random_count * 3


def test_rows_sorted():
    rows = rp.run_suites(_cfg(suites=(rp.WONG_SWEEP,))).rows[rp.WONG_SWEEP]
    keys = [(r["s"], r["t"], r["q"], r["R"], r["test_fn"]) for r in rows]
    assert keys == sorted(keys)


def test_csv_headers_exact():
    report = rp.run_suites(_cfg())
    assert rp.csv_text(report, rp.WONG_SWEEP).splitlines()[0] == (
        "suite,s,t,p,q,n,N,T,mollifier,R,epsilon,C,test_fn,lhs,mid,base,margin")
    assert rp.csv_text(report, rp.QUASINORM).splitlines()[0] == (
        "suite,k,l,m,p,R,seed,epsilon,C,bound1,bound2,additivity_err")
    assert rp.csv_text(report, rp.CONSTANTS_SWEEP).splitlines()[0] == (
        "suite,s,t,mollifier,n,N,T,R,epsilon,C")


def test_empty_csv_is_header_only(tmp_path):
    path = rp.emit_csv(rp.Report(), tmp_path / "w.csv")
    assert path.read_text() == ",".join(rp.HEADERS[rp.WONG_SWEEP]) + "\n"


def test_csv_inf_and_roundtrip():
    report = rp.run_suites(_cfg(suites=(rp.WONG_SWEEP,)))
    rows = list(csv.DictReader(io.StringIO(rp.csv_text(report, rp.WONG_SWEEP))))
    qs = {r["q"] for r in rows}
    assert "inf" in qs
    p_for_inf = {r["p"] for r in rows if r["q"] == "inf"}
    assert p_for_inf == {"1.0"}
    first = report.rows[rp.WONG_SWEEP][0]
    assert float(rows[0]["margin"]) == first["margin"]


def test_emit_csv_unwritable(tmp_path):
    with pytest.raises(OSError):
        rp.emit_csv(rp.Report(), tmp_path / "missing" / "w.csv")


def test_write_report(tmp_path):
    report = rp.run_suites(_cfg(suites=(rp.KERNEL_MASS, rp.GROUP_LAW)))
    paths = rp.write_report(report, tmp_path / "out")
    assert sorted(p.name for p in paths) == ["group-law.csv", "kernel-mass.csv"]
    assert (tmp_path / "out" / "summary.txt").read_text().endswith("PASS\n")


def _run_cli(tmp_path, out, *extra):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(SMALL)
    return subprocess.run([sys.executable, "-m", "wonglab.cli", "run", "--config", str(cfg),
                           "--out", str(out), *extra], capture_output=True, text=True)


def _digest(directory):
    h = hashlib.sha256()
    for path in sorted(directory.glob("*.csv")):
        h.update(path.name.encode() + path.read_bytes())
    return h.hexdigest()


def test_cli_byte_identical(tmp_path):
    a = _run_cli(tmp_path, tmp_path / "a", "--seed", "5")
    b = _run_cli(tmp_path, tmp_path / "b", "--seed", "5")
    assert a.returncode == b.returncode == 0, a.stderr
    assert _digest(tmp_path / "a") == _digest(tmp_path / "b")
    c = _run_cli(tmp_path, tmp_path / "c", "--seed", "6")
    assert _digest(tmp_path / "c") != _digest(tmp_path / "a")


def test_cli_suites_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(SMALL)
    code = main(["run", "--config", str(cfg), "--out", str(tmp_path), "--suites", "kernel-mass"])
    assert code == 0
    assert [p.name for p in tmp_path.glob("*.csv")] == ["kernel-mass.csv"]
    assert "kernel-mass: 4 rows" in capsys.readouterr().out


def test_cli_invariant_failure(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(SMALL)
    monkeypatch.setattr(rp, "GROUP_LAW_TOL", 1e-300)
    code = main(["run", "--config", str(cfg), "--out", str(tmp_path), "--suites", "group-law"])
    assert code == 1
    out = capsys.readouterr().out
    assert "FAILED group-law" in out and out.endswith("FAIL\n")


@pytest.mark.parametrize("text", ["orders = (2, 1)", "bogus = 1"])
def test_cli_config_error(tmp_path, capsys, text):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(text)
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "config error" in capsys.readouterr().err


def test_cli_missing_config(tmp_path):
    assert main(["run", "--config", str(tmp_path / "none.cfg")]) == 2


def test_cli_bad_suites_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(SMALL)
    assert main(["run", "--config", str(cfg), "--suites", "nonsense"]) == 2


def test_cli_constants(capsys):
    code = main(["constants", "--s", "1", "--t", "2", "--kind", "bump", "--r-list", "1,2,4"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [float(r["R"]) for r in rows] == [1, 2, 4]
    eps = [float(r["epsilon"]) for r in rows]
    assert eps[0] > eps[1] > eps[2] > 0


def test_cli_constants_target(capsys):
    assert main(["constants", "--s", "1", "--t", "2", "--kind", "gaussian",
                 "--r-list", "1,2,4,8", "--target", "0.1"]) == 0
    assert "# target epsilon <= 0.1: R = " in capsys.readouterr().out
    assert main(["constants", "--s", "1", "--t", "2", "--kind", "gaussian",
                 "--r-list", "1,2", "--target", "1e-9"]) == 1


@pytest.mark.parametrize("argv", [
    ["constants", "--s", "2", "--t", "1", "--r-list", "1,2"],
    ["constants", "--s", "1", "--t", "2", "--r-list", "4,2"],
])
def test_cli_constants_errors(argv):
    assert main(argv) == 2
