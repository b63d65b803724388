"""Run configuration, verification suites and deterministic CSV reports.

Config files are flat ``key = value`` lines; ``#`` starts a comment and lists
are comma separated.  Recognized keys and defaults::

    n = 1
    N = 4096
    T = 40
    orders = (0.5, 1), (1, 2), (1, 3)
    q = 1, 2, 4, inf
    mollifier = gaussian
    R = 2, 8, 32
    catalog = all            # or none, or a list of names
    random_count = 40
    decay = 2
    seed = 0
    suites = all             # or none / empty, or a list of suite names
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import catalog as cat
from .bessel import kernel_mass, verify_group_law
from .mollifiers import KINDS, IDENTITY, make_mollifier
from .quasinorm import ScaleIndices, inclusion_witness, unit_ball_sample
from .spectral_grid import make_grid
from .wong import (
    WongParams,
    constant_tradeoff_sweep,
    decomposition_error,
    verify_wong,
    wong_constants,
)

GROUP_LAW = "group-law"
KERNEL_MASS = "kernel-mass"
WONG_SWEEP = "wong-sweep"
CONSTANTS_SWEEP = "constants-sweep"
QUASINORM = "quasinorm-check"
SUITES = (GROUP_LAW, KERNEL_MASS, WONG_SWEEP, CONSTANTS_SWEEP, QUASINORM)

HEADERS = {
    WONG_SWEEP: ("suite", "s", "t", "p", "q", "n", "N", "T", "mollifier", "R", "epsilon",
                 "C", "test_fn", "lhs", "mid", "base", "margin"),
    QUASINORM: ("suite", "k", "l", "m", "p", "R", "seed", "epsilon", "C", "bound1",
                "bound2", "additivity_err"),
    CONSTANTS_SWEEP: ("suite", "s", "t", "mollifier", "n", "N", "T", "R", "epsilon", "C"),
    GROUP_LAW: ("suite", "test_fn", "z", "w", "rel_err"),
    KERNEL_MASS: ("suite", "s", "n", "N", "T", "mass", "abs_err"),
}

GROUP_LAW_PAIRS = ((1.0, 1.0), (0.7, 1.3), (-1.0, 2.0))
KERNEL_MASS_ORDERS = (0.5, 1.0, 2.0, 4.0)
SCALE_INDICES = (ScaleIndices(0, 1, 2), ScaleIndices(0, 1, 3), ScaleIndices(1, 2, 4))

# assertion-level tolerances of the suites
GROUP_LAW_TOL = 1e-12
MARGIN_TOL = 1e-8
PART_TOL = 1e-6
DECOMP_TOL = 1e-10
WITNESS_TOL = 1e-6
ADDITIVITY_TOL = 1e-10
MONOTONE_SLACK = 1e-10


def kernel_mass_tol(s: float) -> float:
    return 1e-4 if s >= 1 else 1e-2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int = 1
    N: int = 4096
    T: float = 40.0
    orders: tuple = ((0.5, 1.0), (1.0, 2.0), (1.0, 3.0))
    q: tuple = (1.0, 2.0, 4.0, math.inf)
    mollifier: str = "gaussian"
    R: tuple = (2.0, 8.0, 32.0)
    catalog: tuple = tuple(cat.NAMED)
    random_count: int = 40
    decay: float = 2.0
    seed: int = 0
    suites: tuple = SUITES
    output: str = "."

    def __post_init__(self):
        for s, t in self.orders:
            if not 0 < s < t:
                raise ConfigError(f"orders: ({s:g},{t:g}) requires 0 < s < t")
        for q in self.q:
            if not q >= 1:
                raise ConfigError(f"q: exponent {q:g} outside [1, inf]")
        if any(r <= 0 for r in self.R):
            raise ConfigError("R: scales must be positive")
        if any(b <= a for a, b in zip(self.R, self.R[1:])):
            raise ConfigError("R: list must be strictly ascending")
        if self.mollifier not in KINDS or self.mollifier == IDENTITY:
            raise ConfigError(f"mollifier: unknown kind {self.mollifier!r}")
        unknown = [name for name in self.catalog if name not in cat.NAMED]
        if unknown:
            raise ConfigError(f"catalog: unknown functions {unknown}")
        if self.random_count < 0:
            raise ConfigError("random_count: must be nonnegative")
        if not self.decay > 0:
            raise ConfigError("decay: must be positive")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed: must be an unsigned 64-bit integer")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigError(f"suites: unknown suites {bad}")
        try:
            make_grid(self.n, self.N, self.T)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    @property
    def grid(self):
        return make_grid(self.n, self.N, self.T)


def _number(tok: str) -> float:
    tok = tok.strip().lower()
    if tok in ("inf", "infinity", "+inf"):
        return math.inf
    return float(tok)


def _integer(tok: str) -> int:
    val = float(tok)
    if val != int(val):
        raise ValueError(f"{tok!r} is not an integer")
    return int(val)


def _names(value: str) -> tuple:
    value = value.strip()
    if value.lower() in ("", "none"):
        return ()
    return tuple(v.strip() for v in value.split(",") if v.strip())


def _orders(value: str) -> tuple:
    pairs = re.findall(r"\(([^()]*)\)", value)
    leftover = re.sub(r"\([^()]*\)", "", value).replace(",", "").strip()
    if leftover or not pairs:
        raise ValueError("expected a list of (s,t) pairs")
    out = []
    for pair in pairs:
        parts = pair.split(",")
        if len(parts) != 2:
            raise ValueError(f"pair ({pair}) must have two entries")
        out.append((_number(parts[0]), _number(parts[1])))
    return tuple(out)


_PARSERS = {
    "n": _integer,
    "N": _integer,
    "T": _number,
    "orders": _orders,
    "q": lambda v: tuple(_number(x) for x in v.split(",")),
    "mollifier": lambda v: v.strip().lower(),
    "R": lambda v: tuple(_number(x) for x in v.split(",")),
    "catalog": lambda v: tuple(cat.NAMED) if v.strip().lower() == "all" else _names(v),
    "random_count": _integer,
    "decay": _number,
    "seed": _integer,
    "suites": lambda v: SUITES if v.strip().lower() == "all" else _names(v),
}


def parse_config(text: str) -> RunConfig:
    """Parse ``key = value`` text into a validated :class:`RunConfig`.

    Raises
    ------
    ConfigError
        On malformed lines (with the line number), unknown or repeated keys,
        and constraint violations (naming the offending key).
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _PARSERS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = _PARSERS[key](value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from None
    return RunConfig(**values)


def load_config(path) -> RunConfig:
    return parse_config(Path(path).read_text())


@dataclass
class Report:
    """Rows per suite plus the failed checks.

    ``failures`` holds ``(suite, parameter tuple, reason)`` entries;
    ``worst`` the worst normalized slack seen per suite (negative = violated).
    """

    suites: tuple = ()
    rows: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    worst: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def _track(self, suite: str, slack: float):
        self.worst[suite] = min(self.worst.get(suite, math.inf), slack)

    def summary(self) -> str:
        lines = []
        for suite in self.suites:
            rows = self.rows.get(suite, [])
            failed = sum(1 for f in self.failures if f[0] == suite)
            worst = self.worst.get(suite)
            slack = "n/a" if worst is None else f"{worst:.6g}"
            lines.append(f"{suite}: {len(rows)} rows, {failed} failed checks, worst slack {slack}")
        for suite, params, reason in self.failures:
            lines.append(f"FAILED {suite} {params}: {reason}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _catalog(cfg: RunConfig, grid):
    return cat.catalog(grid, cfg.catalog, cfg.random_count, cfg.decay, cfg.seed)


def _group_law(cfg, grid, report):
    rows = []
    for name, f in _catalog(cfg, grid):
        for z, w in GROUP_LAW_PAIRS:
            err = verify_group_law(f, z, w)
            rows.append({"suite": GROUP_LAW, "test_fn": name, "z": z, "w": w, "rel_err": err})
            report._track(GROUP_LAW, 1.0 - err / GROUP_LAW_TOL)
            if err > GROUP_LAW_TOL:
                report.failures.append((GROUP_LAW, (name, z, w), f"rel_err {err:.3e}"))
    rows.sort(key=lambda r: (r["test_fn"], r["z"], r["w"]))
    return rows


def _kernel_mass(cfg, grid, report):
    rows = []
    for s in KERNEL_MASS_ORDERS:
        mass = kernel_mass(s, grid)
        err = abs(mass - 1.0)
        tol = kernel_mass_tol(s)
        rows.append({"suite": KERNEL_MASS, "s": s, "n": grid.n, "N": grid.N, "T": grid.T,
                     "mass": mass, "abs_err": err})
        report._track(KERNEL_MASS, 1.0 - err / tol)
        if err > tol:
            report.failures.append((KERNEL_MASS, (s,), f"|mass - 1| = {err:.3e} > {tol:g}"))
    return rows


def _wong_sweep(cfg, grid, report):
    fields = _catalog(cfg, grid)
    rows = []
    for s, t in sorted(cfg.orders):
        for R in cfg.R:
            moll = make_mollifier(cfg.mollifier, R, grid)
            consts = wong_constants(s, t, moll)
            for name, f in fields:
                derr = decomposition_error(f, s, t, moll)
                if derr > DECOMP_TOL:
                    report.failures.append((WONG_SWEEP, (s, t, R, name),
                                            f"decomposition error {derr:.3e}"))
                for q in cfg.q:
                    row = verify_wong(f, WongParams(s, t, q, R, cfg.mollifier), name, moll, consts)
                    params = (s, t, q, R, name)
                    rhs = row.rhs
                    report._track(WONG_SWEEP, row.margin / rhs if rhs > 0 else 0.0)
                    if not row.holds(MARGIN_TOL):
                        report.failures.append((WONG_SWEEP, params, f"margin {row.margin:.3e}"))
                    if not row.parts_hold(PART_TOL):
                        report.failures.append((WONG_SWEEP, params, "part-wise Young bound"))
                    rows.append(_wong_record(row, grid, cfg.mollifier))
    rows.sort(key=lambda r: (r["s"], r["t"], r["q"], r["R"], r["test_fn"]))
    return rows


def _wong_record(row, grid, kind):
    return {"suite": WONG_SWEEP, "s": row.s, "t": row.t, "p": row.p, "q": row.q,
            "n": grid.n, "N": grid.N, "T": grid.T, "mollifier": kind, "R": row.R,
            "epsilon": row.epsilon, "C": row.c, "test_fn": row.test_fn, "lhs": row.lhs,
            "mid": row.mid, "base": row.base, "margin": row.margin}


def _constants_sweep(cfg, grid, report):
    rows = []
    for s, t in sorted(cfg.orders):
        sweep = constant_tradeoff_sweep(s, t, cfg.R, cfg.mollifier, grid)
        for R, eps, c in sweep.rows:
            rows.append({"suite": CONSTANTS_SWEEP, "s": s, "t": t, "mollifier": cfg.mollifier,
                         "n": grid.n, "N": grid.N, "T": grid.T, "R": R, "epsilon": eps, "C": c})
        for (R0, e0, c0), (R1, e1, _) in zip(sweep.rows, sweep.rows[1:]):
            if e1 > e0 * (1 + MONOTONE_SLACK):
                report.failures.append((CONSTANTS_SWEEP, (s, t, R1), "epsilon increased"))
        for R, eps, c in sweep.rows:
            if not (0 < eps <= 2 and c >= 1 - 1e-10):
                report.failures.append((CONSTANTS_SWEEP, (s, t, R), "constants out of range"))
    return rows


def _quasinorm(cfg, grid, report):
    rows = []
    ps = sorted(set(cfg.q))
    for R in cfg.R:
        moll = make_mollifier(cfg.mollifier, R, grid)
        for p in ps:
            for i in range(cfg.random_count):
                sample = unit_ball_sample(cfg.seed + i, p, grid, cfg.decay)
                for idx in SCALE_INDICES:
                    w = inclusion_witness(sample, idx, moll)
                    rows.append({"suite": QUASINORM, "k": idx.k, "l": idx.l, "m": idx.m, "p": p,
                                 "R": R, "seed": sample.seed, "epsilon": w.epsilon, "C": w.c,
                                 "bound1": w.bound1, "bound2": w.bound2,
                                 "additivity_err": w.additivity_err})
                    report._track(QUASINORM, min(1 - w.bound1 / w.epsilon, 1 - w.bound2 / w.c))
                    if not w.holds(WITNESS_TOL, ADDITIVITY_TOL):
                        report.failures.append((QUASINORM, (idx.k, idx.l, idx.m, p, R, sample.seed),
                                                "inclusion witness bound"))
    rows.sort(key=lambda r: (r["k"], r["l"], r["m"], r["p"], r["R"], r["seed"]))
    return rows


_RUNNERS = {
    GROUP_LAW: _group_law,
    KERNEL_MASS: _kernel_mass,
    WONG_SWEEP: _wong_sweep,
    CONSTANTS_SWEEP: _constants_sweep,
    QUASINORM: _quasinorm,
}


def run_suites(cfg: RunConfig) -> Report:
    """Run the selected suites in a fixed order; deterministic given ``cfg``."""
    selected = tuple(s for s in SUITES if s in cfg.suites)
    report = Report(suites=selected)
    if not selected:
        return report
    grid = cfg.grid
    for suite in selected:
        report.rows[suite] = _RUNNERS[suite](cfg, grid, report)
    return report


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(value)


def csv_text(report: Report, suite: str) -> str:
    header = HEADERS[suite]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in report.rows.get(suite, []):
        writer.writerow([_fmt(row[col]) for col in header])
    return buf.getvalue()


def emit_csv(report: Report, path, suite: str = WONG_SWEEP) -> Path:
    """Write one suite's rows with its fixed header to ``path``."""
    path = Path(path)
    try:
        path.write_text(csv_text(report, suite))
    except OSError as exc:
        raise OSError(f"cannot write report {path}: {exc}") from exc
    return path


def write_report(report: Report, out_dir) -> list:
    """Write ``<suite>.csv`` for every selected suite and ``summary.txt``."""
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc}") from exc
    paths = [emit_csv(report, out / f"{suite}.csv", suite) for suite in report.suites]
    (out / "summary.txt").write_text(report.summary())
    return paths


def with_overrides(cfg: RunConfig, **changes) -> RunConfig:
    return replace(cfg, **{k: v for k, v in changes.items() if v is not None})


def tradeoff_csv(sweep) -> str:
    """``R,epsilon,C`` table of a trade-off sweep."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("R", "epsilon", "C"))
    for R, eps, c in sweep.rows:
        writer.writerow((_fmt(R), _fmt(eps), _fmt(c)))
    return buf.getvalue()

