"""``wong-lab`` command line driver.

Exit codes: 0 all checks pass, 1 an invariant failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import report as rp
from .spectral_grid import make_grid
from .wong import constant_tradeoff_sweep

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _float_list(text):
    return [float(x) for x in text.split(",") if x.strip()]


def build_parser():
    parser = argparse.ArgumentParser(prog="wong-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification suites and write CSV reports")
    run.add_argument("--config", required=True, help="path of a key = value config file")
    run.add_argument("--seed", type=int, help="override the config seed")
    run.add_argument("--out", default=".", help="output directory (default: .)")
    run.add_argument("--suites", help="comma-separated suites overriding the config")

    const = sub.add_parser("constants", help="print the (R, epsilon, C) table")
    const.add_argument("--s", type=float, required=True)
    const.add_argument("--t", type=float, required=True)
    const.add_argument("--kind", choices=("bump", "gaussian"), default="bump")
    const.add_argument("--r-list", required=True, help="comma-separated ascending scales")
    const.add_argument("--target", type=float, help="report the smallest R with epsilon <= target")
    const.add_argument("--n", type=int, default=1)
    const.add_argument("--N", type=int, default=4096)
    const.add_argument("--T", type=float, default=40.0)

    sub.add_parser("selftest", help="run the acceptance criteria")
    return parser


def _cmd_run(args) -> int:
    try:
        cfg = rp.load_config(args.config)
        suites = None
        if args.suites is not None:
            suites = rp._PARSERS["suites"](args.suites)
        cfg = rp.with_overrides(cfg, seed=args.seed, suites=suites, output=args.out)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = rp.run_suites(cfg)
    rp.write_report(report, cfg.output)
    sys.stdout.write(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_constants(args) -> int:
    try:
        grid = make_grid(args.n, args.N, args.T)
        sweep = constant_tradeoff_sweep(args.s, args.t, _float_list(args.r_list), args.kind,
                                        grid, args.target)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(rp.tradeoff_csv(sweep))
    if args.target is not None:
        if sweep.witness is None:
            print(f"# no listed R reaches epsilon <= {args.target:g}")
            return EXIT_FAIL
        R, eps, c = sweep.witness
        print(f"# target epsilon <= {args.target:g}: R = {R:g}, epsilon = {eps!r}, C = {c!r}")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    from .acceptance import run_all

    results = run_all(verbose=True)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": _cmd_run, "constants": _cmd_constants, "selftest": _cmd_selftest}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
