"""Constructive constants and verification of the interpolation inequality

.. math:: \\|L_{-s} * \\varphi\\|_q \\le \\varepsilon \\|L_{-t} * \\varphi\\|_q + C \\|\\varphi\\|_q,
          \\qquad 0 < s < t.

Splitting ``J_{-s} phi = (delta - phi_R) * L_{t-s} * J_{-t} phi + (L_{-s} * phi_R) * phi``
and applying Young's inequality to each piece gives

* ``epsilon(R) = ||(delta - phi_R) * L_{t-s}||_1`` and
* ``C(R) = ||L_{-s} * phi_R||_1``.

Both are discrete L^1 norms of kernels built from the discrete transform of
the sampled mollifier, so the decomposition is exact up to rounding and the
discrete Young inequality certifies every row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .bessel import bessel_potential, grid_multiplier, kernel_l1
from .mollifiers import BUMP, IDENTITY, Mollifier, make_mollifier
from .spectral_grid import Field, Grid, apply_multiplier, conjugate_exponent, lp_norm


def _check_orders(s: float, t: float):
    if not (np.isfinite(s) and np.isfinite(t) and 0 < s < t):
        raise ValueError(f"orders require 0 < s < t, got s={s!r}, t={t!r}")


@dataclass(frozen=True)
class WongParams:
    s: float
    t: float
    q: float
    R: float
    kind: str = BUMP

    def __post_init__(self):
        _check_orders(self.s, self.t)
        if not self.q >= 1:
            raise ValueError(f"exponent q must lie in [1, inf], got {self.q!r}")
        if not self.R > 0:
            raise ValueError(f"mollifier scale R must be positive, got {self.R!r}")

    @property
    def p(self) -> float:
        return conjugate_exponent(self.q)


@dataclass(frozen=True)
class WongConstants:
    epsilon: float
    c: float


@dataclass(frozen=True)
class SweepRow:
    """One verified instance of the inequality.

    ``margin = epsilon * mid + c * base - lhs`` where ``lhs``, ``mid`` and
    ``base`` are the order-``s``, order-``t`` and order-0 seminorms.
    """

    s: float
    t: float
    q: float
    R: float
    kind: str
    epsilon: float
    c: float
    test_fn: str
    lhs: float
    mid: float
    base: float
    margin: float
    grid: Optional[Grid] = field(default=None, compare=False)
    part1_norm: float = np.nan
    part2_norm: float = np.nan

    @property
    def p(self) -> float:
        return conjugate_exponent(self.q)

    @property
    def rhs(self) -> float:
        return self.epsilon * self.mid + self.c * self.base

    def holds(self, rel_tol: float = 1e-8) -> bool:
        return self.margin >= -rel_tol * self.rhs

    def parts_hold(self, rel_tol: float = 1e-6) -> bool:
        return (self.part1_norm <= self.epsilon * self.mid * (1 + rel_tol)
                and self.part2_norm <= self.c * self.base * (1 + rel_tol))


def epsilon_multiplier(s: float, t: float, mollifier: Mollifier) -> np.ndarray:
    """Spectrum of ``(delta - phi_R) * L_{t-s}``."""
    return (1.0 - mollifier.spectrum) * grid_multiplier(mollifier.grid, t - s)


def c_multiplier(s: float, mollifier: Mollifier) -> np.ndarray:
    """Spectrum of ``L_{-s} * phi_R``."""
    return grid_multiplier(mollifier.grid, -s) * mollifier.spectrum


def epsilon_constant(s: float, t: float, mollifier: Mollifier, grid: Grid = None) -> float:
    _check_orders(s, t)
    _check_grid(mollifier, grid)
    if mollifier.kind == IDENTITY:
        return 0.0
    return kernel_l1(mollifier.grid, epsilon_multiplier(s, t, mollifier))


def c_constant(s: float, mollifier: Mollifier, grid: Grid = None) -> float:
    if not s > 0:
        raise ValueError(f"order s must be positive, got {s!r}")
    _check_grid(mollifier, grid)
    return kernel_l1(mollifier.grid, c_multiplier(s, mollifier))


def wong_constants(s: float, t: float, mollifier: Mollifier) -> WongConstants:
    return WongConstants(epsilon_constant(s, t, mollifier), c_constant(s, mollifier))


def _check_grid(mollifier: Mollifier, grid: Optional[Grid]):
    if grid is not None and grid != mollifier.grid:
        raise ValueError("mollifier was sampled on a different grid")


def decompose(phi: Field, s: float, t: float, mollifier: Mollifier, high: Field = None):
    """Split ``J_{-s} phi`` into the ``(delta - phi_R)`` and ``phi_R`` pieces.

    Returns ``(part1, part2)`` with ``part1 = (delta - phi_R) * L_{t-s} * J_{-t} phi``
    and ``part2 = (L_{-s} * phi_R) * phi``.  ``high`` may pass a precomputed
    ``J_{-t} phi``.
    """
    _check_orders(s, t)
    if phi.grid != mollifier.grid:
        raise ValueError("field and mollifier live on different grids")
    if high is None:
        high = bessel_potential(phi, -t)
    part1 = apply_multiplier(high, epsilon_multiplier(s, t, mollifier))
    part2 = apply_multiplier(phi, c_multiplier(s, mollifier))
    return part1, part2


def verify_wong(phi: Field, params: WongParams, test_fn: str = "", mollifier=None,
                constants: WongConstants = None) -> SweepRow:
    """Evaluate both sides of the inequality with the constructive constants.

    ``mollifier`` and ``constants`` may be supplied to reuse work across a
    sweep; they must match ``params``.
    """
    if mollifier is None:
        mollifier = make_mollifier(params.kind, params.R, phi.grid)
    if constants is None:
        constants = wong_constants(params.s, params.t, mollifier)
    q = params.q
    low = bessel_potential(phi, -params.s)
    high = bessel_potential(phi, -params.t)
    part1, part2 = decompose(phi, params.s, params.t, mollifier, high=high)
    lhs, mid, base = lp_norm(low, q), lp_norm(high, q), lp_norm(phi, q)
    margin = constants.epsilon * mid + constants.c * base - lhs
    return SweepRow(
        s=params.s, t=params.t, q=q, R=params.R, kind=params.kind,
        epsilon=constants.epsilon, c=constants.c, test_fn=test_fn,
        lhs=lhs, mid=mid, base=base, margin=margin, grid=phi.grid,
        part1_norm=lp_norm(part1, q), part2_norm=lp_norm(part2, q),
    )


def decomposition_error(phi: Field, s: float, t: float, mollifier: Mollifier) -> float:
    """Relative sup error of ``part1 + part2`` against ``J_{-s} phi``."""
    part1, part2 = decompose(phi, s, t, mollifier)
    target = bessel_potential(phi, -s)
    err = (part1 + part2 - target).sup()
    scale = target.sup()
    return err / scale if scale > 0 else err


@dataclass(frozen=True)
class Tradeoff:
    """``(R, epsilon, C)`` triples of an R-sweep plus the witness for a target epsilon."""

    s: float
    t: float
    kind: str
    rows: list
    target: Optional[float] = None
    witness: Optional[tuple] = None


def constant_tradeoff_sweep(s: float, t: float, R_list: Sequence[float], kind: str,
                            grid: Grid, target: float = None) -> Tradeoff:
    """Compute ``(R, epsilon(R), C(R))`` for each ``R``.

    An entry ``R = inf`` stands for the discrete identity mollifier.  With a
    ``target``, the witness is the first listed ``R`` whose epsilon does not
    exceed it, together with its constants (``None`` if no entry qualifies).
    """
    _check_orders(s, t)
    R_list = list(R_list)
    if not R_list:
        raise ValueError("R list is empty")
    if any(b <= a for a, b in zip(R_list, R_list[1:])):
        raise ValueError("R list must be strictly ascending")
    rows = []
    for R in R_list:
        moll = make_mollifier(IDENTITY if np.isinf(R) else kind, R, grid)
        k = wong_constants(s, t, moll)
        rows.append((float(R), k.epsilon, k.c))
    witness = None
    if target is not None:
        witness = next((row for row in rows if row[1] <= target), None)
    return Tradeoff(s, t, kind, rows, target, witness)
