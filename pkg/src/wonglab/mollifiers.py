"""Unit-mass mollifiers ``phi_R(x) = R^n phi(R x)`` sampled on a grid."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from scipy import integrate

from .spectral_grid import Field, Grid, apply_multiplier, forward_transform

BUMP = "bump"
GAUSSIAN = "gaussian"
IDENTITY = "identity"
KINDS = (BUMP, GAUSSIAN, IDENTITY)

# minimum number of grid cells per bump radius
_BUMP_MIN_CELLS = 4


@lru_cache(maxsize=None)
def bump_normalization(n: int) -> float:
    """``c`` such that ``c exp(-1/(1-|x|^2))`` integrates to one over the unit ball."""
    if n == 1:
        val, _ = integrate.quad(lambda r: 2 * np.exp(-1 / (1 - r * r)), 0, 1)
    elif n == 2:
        val, _ = integrate.quad(lambda r: 2 * np.pi * r * np.exp(-1 / (1 - r * r)), 0, 1)
    else:
        raise ValueError(f"unsupported dimension {n}")
    return 1.0 / val


def bump_profile(r: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(r, dtype=float)
    inside = r < 1
    out[inside] = bump_normalization(n) * np.exp(-1.0 / (1.0 - r[inside] ** 2))
    return out


def gaussian_profile(r: np.ndarray, n: int) -> np.ndarray:
    return np.pi ** (-n / 2) * np.exp(-(r**2))


@dataclass(frozen=True, eq=False)
class Mollifier:
    """A sampled mollifier.

    ``profile_mass`` is the discrete mass of the samples before they were
    renormalized to one.  The identity kind is the discrete Dirac mass, whose
    transform is exactly one; it carries ``R = inf``.
    """

    kind: str
    R: float
    field: Field
    profile_mass: float

    @property
    def grid(self) -> Grid:
        return self.field.grid

    @cached_property
    def spectrum(self) -> np.ndarray:
        """Discrete transform of the samples, in spectral order."""
        if self.kind == IDENTITY:
            return np.ones(self.grid.shape, dtype=complex)
        return forward_transform(self.field).values


def make_mollifier(kind: str, R: float, grid: Grid) -> Mollifier:
    """Sample ``R^n phi(R x)`` for the chosen profile and renormalize to unit mass.

    Raises
    ------
    ValueError
        For an unknown kind, ``R <= 0``, or a bump narrower than four grid
        cells in radius.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown mollifier kind {kind!r}; expected one of {KINDS}")
    if kind == IDENTITY:
        vals = np.zeros(grid.shape)
        vals[(grid.N // 2,) * grid.n] = 1.0 / grid.cell_volume
        return Mollifier(IDENTITY, np.inf, Field(grid, vals, real_valued=True), 1.0)
    if not (np.isfinite(R) and R > 0):
        raise ValueError(f"mollifier scale R must be positive and finite, got {R!r}")
    if kind == BUMP and 1.0 / R < _BUMP_MIN_CELLS * grid.h:
        raise ValueError(
            f"bump of radius 1/R = {1.0 / R:.4g} is under-resolved on a grid with "
            f"h = {grid.h:.4g}; need 1/R >= {_BUMP_MIN_CELLS}h"
        )
    profile = bump_profile if kind == BUMP else gaussian_profile
    vals = R**grid.n * profile(R * grid.radius, grid.n)
    mass = float(grid.cell_volume * np.sum(vals))
    return Mollifier(kind, float(R), Field(grid, vals / mass, real_valued=True), mass)


def mollify(f: Field, mollifier: Mollifier) -> Field:
    """``phi_R * f`` by spectral multiplication."""
    if f.grid != mollifier.grid:
        raise ValueError("field and mollifier live on different grids")
    return apply_multiplier(f, mollifier.spectrum)
