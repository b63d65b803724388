"""Named smooth test functions and seeded random fields.

Every named function is smooth and carries at most 1e-12 of its sup norm
outside ``[-10, 10]^n``, so on grids with ``T >= 40`` periodization effects
stay below all verification tolerances.  Functions are written in terms of
the first coordinate ``x`` and ``r^2 = |x|^2`` so they work for ``n = 1, 2``.
"""

from __future__ import annotations

import numpy as np

from .spectral_grid import Field, Grid, random_band_limited

DECAY_TOL = 1e-12


def _r2(pts):
    return sum(p**2 for p in pts)


def _sech2(u):
    e = np.exp(-2.0 * u)
    return 4.0 * e / (1.0 + e) ** 2


def _bump(pts):
    r2 = _r2(pts) / 4.0
    out = np.zeros_like(r2)
    inside = r2 < 1
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - r2[inside]))
    return out


NAMED = {
    "gaussian": lambda pts: np.exp(-_r2(pts)),
    "narrow_gaussian": lambda pts: np.exp(-4.0 * _r2(pts)),
    "wide_gaussian": lambda pts: np.exp(-_r2(pts) / 3.0),
    "shifted_gaussian": lambda pts: np.exp(-(_r2(pts) - 4.0 * pts[0] + 4.0)),
    "hermite1": lambda pts: pts[0] * np.exp(-_r2(pts)),
    "hermite2": lambda pts: (4.0 * pts[0] ** 2 - 2.0) * np.exp(-_r2(pts)),
    "gabor_cos": lambda pts: np.exp(-_r2(pts) / 2.0) * np.cos(5.0 * pts[0]),
    "gabor_sin": lambda pts: np.exp(-_r2(pts) / 2.0) * np.sin(3.0 * pts[0]),
    "bump": _bump,
    "sech2": lambda pts: _sech2(3.0 * np.sqrt(_r2(pts))),
    "two_gaussians": lambda pts: (np.exp(-(_r2(pts) + 6.0 * pts[0] + 9.0))
                                  - 0.5 * np.exp(-2.0 * (_r2(pts) - 2.0 * pts[0] + 1.0))),
    "chirp": lambda pts: np.exp(-_r2(pts) / 2.0) * np.exp(1j * pts[0] ** 2),
}


def named_field(name: str, grid: Grid) -> Field:
    try:
        func = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown catalog function {name!r}") from None
    return Field.from_function(grid, lambda *pts: func(pts))


def random_name(seed: int) -> str:
    return f"random_{seed}"


def catalog(grid: Grid, names=None, random_count: int = 0, decay: float = 2.0,
            seed: int = 0) -> list:
    """``(name, Field)`` pairs: named functions then ``random_count`` seeded fields."""
    names = list(NAMED) if names is None else list(names)
    out = [(name, named_field(name, grid)) for name in names]
    for i in range(random_count):
        out.append((random_name(seed + i), random_band_limited(grid, seed + i, decay)))
    return out


def tail_fraction(f: Field) -> float:
    """Largest ``|f|`` outside ``[-T/4, T/4]^n`` relative to the sup norm."""
    outside = np.zeros(f.grid.shape, dtype=bool)
    for p in f.grid.points:
        outside |= np.abs(p) > f.grid.T / 4
    top = f.sup()
    if top == 0 or not outside.any():
        return 0.0
    return float(np.max(np.abs(f.values[outside])) / top)
