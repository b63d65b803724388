"""Acceptance criteria, runnable as ``wong-lab selftest`` or through pytest.

Each criterion returns a :class:`Criterion` with a pass flag and a one-line
detail; tolerances are fixed here.  Default grid: ``n = 1, N = 4096, T = 40``.
"""

from __future__ import annotations

import contextlib
import csv
import hashlib
import io
import math
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog as cat
from . import report as rp
from .bessel import bessel_potential, kernel_mass, verify_group_law
from .mollifiers import make_mollifier
from .quasinorm import duality_gap, inclusion_witness, unit_ball_sample
from .spectral_grid import lp_norm, make_grid, random_band_limited
from .wong import constant_tradeoff_sweep, decomposition_error

DEFAULT_GRID = (1, 4096, 40.0)
WONG_ORDERS = ((0.5, 1.0), (1.0, 2.0), (1.0, 3.0))

# (R, epsilon, C) for (s, t) = (1, 2) with the bump mollifier, from the
# physical-space quadrature oracle in tests/oracles/tradeoff_baseline.py
TRADEOFF_BASELINE = (
    (1.0, 0.29205730404758834, 2.496109622400453),
    (2.0, 0.15264003290976827, 4.860420591329762),
    (4.0, 0.07756642375320247, 9.93815349643276),
    (8.0, 0.03899363323593755, 20.37012184518977),
    (16.0, 0.019529992023456694, 41.428254557198166),
    (32.0, 0.009770001367494846, 83.67076716121802),
    (64.0, 0.004885733526402914, 168.23373440911138),
)
TRADEOFF_GRID = (1, 65536, 40.0)
TRADEOFF_TOL = 1e-3


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"


def default_grid():
    return make_grid(*DEFAULT_GRID)


def full_catalog(grid):
    return cat.catalog(grid, random_count=40)


def group_law():
    grid = default_grid()
    worst = max(verify_group_law(random_band_limited(grid, seed, 2.0), z, w)
                for seed in range(20) for z, w in rp.GROUP_LAW_PAIRS)
    return Criterion(1, "group law", worst <= 1e-12, f"max rel L2 error {worst:.2e} (tol 1e-12)")


def kernel_unit_mass():
    grid = make_grid(1, 16384, 80.0)
    errs = {s: abs(kernel_mass(s, grid) - 1.0) for s in (0.5, 1.0, 2.0, 4.0)}
    ok = all(err <= rp.kernel_mass_tol(s) for s, err in errs.items())
    detail = ", ".join(f"s={s:g}: {e:.1e}" for s, e in errs.items())
    return Criterion(2, "kernel unit mass", ok, detail)


def contraction():
    grid = default_grid()
    worst = -math.inf
    for _, f in full_catalog(grid):
        for s in (0.5, 1.0, 2.0):
            g = bessel_potential(f, s)
            for p in (1, 2, math.inf):
                worst = max(worst, lp_norm(g, p) / lp_norm(f, p))
    return Criterion(3, "contraction", worst <= 1 + 1e-6,
                     f"max ||J_s f||_p / ||f||_p = {worst:.9f} (tol 1 + 1e-6)")


def decomposition_identity():
    grid = default_grid()
    fields = full_catalog(grid)
    worst = 0.0
    for kind in ("bump", "gaussian"):
        for R in (1, 2, 4, 8, 16):
            moll = make_mollifier(kind, R, grid)
            for s, t in WONG_ORDERS:
                for _, f in fields:
                    worst = max(worst, decomposition_error(f, s, t, moll))
    return Criterion(4, "decomposition identity", worst <= 1e-10,
                     f"max rel sup error {worst:.2e} (tol 1e-10)")


def _default_sweep():
    return rp.run_suites(rp.RunConfig(suites=(rp.WONG_SWEEP,)))


def wong_inequality(report=None):
    report = report or _default_sweep()
    rows = report.rows[rp.WONG_SWEEP]
    worst = min(r["margin"] / (r["epsilon"] * r["mid"] + r["C"] * r["base"])
                for r in rows if r["epsilon"] * r["mid"] + r["C"] * r["base"] > 0)
    fails = [f for f in report.failures if "margin" in f[2]]
    ok = not fails and worst >= -rp.MARGIN_TOL and len(rows) >= 50 * 4 * 3 * 3
    return Criterion(5, "interpolation inequality", ok,
                     f"{len(rows)} rows, min margin/rhs {worst:.3e} (tol -1e-8)")


def partwise_young(report=None):
    report = report or _default_sweep()
    fails = [f for f in report.failures if f[2] == "part-wise Young bound"]
    return Criterion(6, "part-wise Young bounds", not fails,
                     f"{len(fails)} violations over {len(report.rows[rp.WONG_SWEEP])} rows")


def tradeoff(out_dir=None):
    grid = make_grid(*TRADEOFF_GRID)
    sweep = constant_tradeoff_sweep(1.0, 2.0, [2.0**k for k in range(7)], "bump", grid)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(out_dir or tmp) / "tradeoff.csv"
        path.write_text(rp.tradeoff_csv(sweep))
        with path.open() as fh:
            table = [(float(r["R"]), float(r["epsilon"]), float(r["C"])) for r in csv.DictReader(fh)]
    Rs = np.array([r[0] for r in table])
    eps = np.array([r[1] for r in table])
    cs = np.array([r[2] for r in table])
    decreasing = bool(np.all(np.diff(eps) < 0))
    ratio = eps[-1] / eps[0]
    nondecreasing = bool(np.all(np.diff(cs) >= 0))
    tail = Rs >= 8
    slope = np.polyfit(np.log(Rs[tail]), np.log(cs[tail]), 1)[0]
    base = np.array(TRADEOFF_BASELINE)
    rel = max(np.max(np.abs(eps / base[:, 1] - 1)), np.max(np.abs(cs / base[:, 2] - 1)))
    same_R = np.array_equal(Rs, base[:, 0])
    ok = (decreasing and ratio < 0.25 and nondecreasing and 0.5 <= slope <= 1.5
          and same_R and rel <= TRADEOFF_TOL)
    return Criterion(7, "constant trade-off", ok,
                     f"eps decreasing={decreasing}, eps(64)/eps(1)={ratio:.4f}, "
                     f"C nondecreasing={nondecreasing}, slope={slope:.3f}, "
                     f"max rel dev from oracle {rel:.1e} (tol 1e-3)")


def inclusion_witnesses():
    grid = default_grid()
    moll = make_mollifier("bump", 8, grid)
    worst_add, worst_bound, fails = 0.0, -math.inf, 0
    for seed in range(20):
        for p in (1, 2, math.inf):
            sample = unit_ball_sample(seed, p, grid)
            for idx in rp.SCALE_INDICES:
                w = inclusion_witness(sample, idx, moll)
                worst_add = max(worst_add, w.additivity_err)
                worst_bound = max(worst_bound, w.bound1 / w.epsilon, w.bound2 / w.c)
                fails += not w.holds(1e-6, 1e-10)
    return Criterion(8, "inclusion witness", fails == 0,
                     f"max additivity {worst_add:.1e}, max bound/constant {worst_bound:.3f}")


def duality():
    grid = default_grid()
    worst = max(duality_gap(f, q, 0) for _, f in full_catalog(grid)
                for q in (1, 2, 4, math.inf))
    return Criterion(9, "duality identity", worst <= 1e-8, f"max gap {worst:.1e} (tol 1e-8)")


DETERMINISM_CONFIG = """\
# small sweep exercising every suite
orders = (1, 2)
q = 2, inf
R = 8
random_count = 3
"""


def determinism():
    from .cli import main

    digests = []
    with tempfile.TemporaryDirectory() as tmp:
        cfg = Path(tmp) / "run.cfg"
        cfg.write_text(DETERMINISM_CONFIG)
        for run in ("a", "b"):
            out = Path(tmp) / run
            with contextlib.redirect_stdout(io.StringIO()):
                code = main(["run", "--config", str(cfg), "--seed", "7", "--out", str(out)])
            if code != 0:
                return Criterion(10, "determinism", False, f"run exited with {code}")
            h = hashlib.sha256()
            for path in sorted(out.glob("*.csv")):
                h.update(path.name.encode())
                h.update(path.read_bytes())
            digests.append(h.hexdigest())
    return Criterion(10, "determinism", digests[0] == digests[1],
                     f"sha256 {digests[0][:12]} vs {digests[1][:12]}")


def run_all(verbose=False):
    sweep = _default_sweep()
    checks = [
        group_law,
        kernel_unit_mass,
        contraction,
        decomposition_identity,
        lambda: wong_inequality(sweep),
        lambda: partwise_young(sweep),
        tradeoff,
        inclusion_witnesses,
        duality,
        determinism,
    ]
    results = []
    for check in checks:
        result = check()
        results.append(result)
        if verbose:
            print(result.line(), flush=True)
    return results
