"""Witnesses for the neighbourhood inclusion of the Bessel scale and duality sampling.

With ``U_k = L_k * B_{1,p}`` (``B_{1,p}`` the unit ball of L^p) every element
``f = J_l g`` of ``U_l`` splits as ``f1 + f2`` with

* ``f1 = (delta - phi_R) * L_{l-k} * J_k g``, so ``||J_{-k} f1||_p <= epsilon``,
* ``f2 = (L_{l-m} * phi_R) * J_m g``, so ``||J_{-m} f2||_p <= C``,

where ``epsilon = ||(delta - phi_R) * L_{l-k}||_1`` and ``C = ||L_{l-m} * phi_R||_1``.
Membership of ``f1`` in ``epsilon U_k`` is certified by the norm bound, which
is equivalent on a grid where ``J_{-k}`` is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bessel import bessel_potential, kernel_l1
from .mollifiers import Mollifier
from .spectral_grid import (
    Field,
    Grid,
    apply_multiplier,
    conjugate_exponent,
    lp_norm,
    random_band_limited,
)
from .wong import c_multiplier, epsilon_multiplier

# maximum number of consecutive seeds tried before giving up on a nonzero draw
_MAX_RESEEDS = 100


@dataclass(frozen=True)
class ScaleIndices:
    k: int
    l: int
    m: int

    def __post_init__(self):
        if any(int(v) != v for v in (self.k, self.l, self.m)):
            raise ValueError("scale indices must be integers")
        if not 0 <= self.k < self.l < self.m:
            raise ValueError(f"scale indices need 0 <= k < l < m, got {(self.k, self.l, self.m)}")

    def shifted(self, by: int = 1) -> "ScaleIndices":
        return ScaleIndices(self.k + by, self.l + by, self.m + by)


@dataclass(frozen=True, eq=False)
class UnitBallSample:
    g: Field
    p: float
    norm: float
    seed: int = -1

    def __post_init__(self):
        actual = lp_norm(self.g, self.p)
        if abs(actual - 1.0) > 1e-12:
            raise ValueError(f"sample has L^{self.p} norm {actual!r}, not 1")


def unit_ball_sample(seed: int, p: float, grid: Grid, a: float = 2.0) -> UnitBallSample:
    """Random band-limited field scaled to unit ``p``-norm.

    A zero draw moves on to the next seed; the seed actually used is stored.
    """
    if not p >= 1:
        raise ValueError(f"exponent p must lie in [1, inf], got {p!r}")
    for used in range(seed, seed + _MAX_RESEEDS):
        f = random_band_limited(grid, used, a)
        norm = lp_norm(f, p)
        if norm > 0:
            g = f * (1.0 / norm)
            return UnitBallSample(g, p, lp_norm(g, p), used)
    raise RuntimeError(f"no nonzero draw in seeds {seed}..{seed + _MAX_RESEEDS - 1}")


@dataclass(frozen=True, eq=False)
class Witness:
    f1: Field
    f2: Field
    bound1: float
    bound2: float
    epsilon: float
    c: float
    additivity_err: float

    def holds(self, rel_tol: float = 1e-6, additivity_tol: float = 1e-10) -> bool:
        return (self.additivity_err <= additivity_tol
                and self.bound1 <= self.epsilon * (1 + rel_tol)
                and self.bound2 <= self.c * (1 + rel_tol))


def inclusion_constants(idx: ScaleIndices, mollifier: Mollifier):
    """``(epsilon, C)`` for the indices; they depend only on ``l - k`` and ``m - l``."""
    grid = mollifier.grid
    eps = kernel_l1(grid, _eps_spectrum(idx, mollifier))
    c = kernel_l1(grid, c_multiplier(idx.m - idx.l, mollifier))
    return eps, c


def _eps_spectrum(idx: ScaleIndices, mollifier: Mollifier) -> np.ndarray:
    # (delta - phi_R) * L_{l-k}: the epsilon multiplier with t - s = l - k
    return epsilon_multiplier(0.0, float(idx.l - idx.k), mollifier)


def inclusion_witness(sample: UnitBallSample, idx: ScaleIndices, mollifier: Mollifier) -> Witness:
    if not isinstance(sample, UnitBallSample):
        raise TypeError("inclusion_witness needs a UnitBallSample")
    g = sample.g
    if g.grid != mollifier.grid:
        raise ValueError("sample and mollifier live on different grids")
    eps, c = inclusion_constants(idx, mollifier)
    f = bessel_potential(g, idx.l)
    f1 = apply_multiplier(bessel_potential(g, idx.k), _eps_spectrum(idx, mollifier))
    f2 = apply_multiplier(bessel_potential(g, idx.m), c_multiplier(idx.m - idx.l, mollifier))
    scale = f.sup()
    err = (f1 + f2 - f).sup()
    p = sample.p
    return Witness(
        f1=f1,
        f2=f2,
        bound1=lp_norm(bessel_potential(f1, -idx.k), p),
        bound2=lp_norm(bessel_potential(f2, -idx.m), p),
        epsilon=eps,
        c=c,
        additivity_err=err / scale if scale > 0 else err,
    )


def pairing(g: Field, f: Field) -> complex:
    """Bilinear pairing ``<g, f> = int g f dx`` by grid quadrature."""
    return complex(g.grid.cell_volume * np.sum(g.values * f.values))


def holder_extremizer(f: Field, q: float) -> Field:
    """Unit element of ``B_{1,p}`` attaining ``|<g, f>| = ||f||_q``.

    ``|f|^(q-1) conj(sign f)`` normalized for ``1 < q < inf``; ``conj(sign f)``
    for ``q = 1``; a discrete point mass at the argmax of ``|f|`` for
    ``q = inf``.
    """
    vals = f.values
    a = np.abs(vals)
    # angle-based phase stays finite for subnormal samples
    phase = np.where(a > 0, np.exp(-1j * np.angle(vals)), 0.0)
    p = conjugate_exponent(q)
    if q == np.inf:
        j = np.unravel_index(np.argmax(a), a.shape)
        g = np.zeros_like(vals)
        g[j] = phase[j] / f.grid.cell_volume
    elif q == 1:
        g = phase
    else:
        g = a ** (q - 1) * phase
    g = Field(f.grid, g)
    return g * (1.0 / lp_norm(g, p))


def duality_gap(f: Field, q: float, seeds: int, grid: Grid = None, include_extremizer: bool = True,
                a: float = 2.0, seed0: int = 0) -> float:
    """``1 - sup |<g, f>| / ||f||_q`` over sampled unit-ball elements ``g``.

    Samples are ``seeds`` random elements of ``B_{1,p}`` (``1/p + 1/q = 1``),
    optionally joined by the Hölder extremizer.
    """
    grid = f.grid if grid is None else grid
    if grid != f.grid:
        raise ValueError("field lives on a different grid")
    norm = lp_norm(f, q)
    if norm == 0:
        raise ValueError("duality gap is undefined for the zero field")
    p = conjugate_exponent(q)
    best = 0.0
    for seed in range(seed0, seed0 + seeds):
        best = max(best, abs(pairing(unit_ball_sample(seed, p, grid, a).g, f)))
    if include_extremizer:
        best = max(best, abs(pairing(holder_extremizer(f, q), f)))
    return float(min(max(1.0 - best / norm, 0.0), 1.0))
