"""Uniform periodic grids, discrete Fourier transforms and L^p quadrature.

A :class:`Grid` samples the cube ``[-T/2, T/2)^n`` with ``N`` points per axis
and stands in for functions on R^n.  Spectral data are stored in the
symmetric wavenumber order ``k = -N/2, ..., N/2 - 1`` (Nyquist first) and use
the angular-frequency convention

.. math:: \\hat f(\\xi) = \\int e^{-i \\xi \\cdot x} f(x)\\, dx,

approximated by ``h^n``-weighted sums with ``h = T/N``.  The inverse is the
exact discrete inverse, ``f_j = T^{-n} \\sum_k \\hat f_k e^{i \\xi_k x_j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Union

import numpy as np

PHYSICAL = "physical"
SPECTRAL = "spectral"

# Imaginary residue allowed before a real-valued pipeline refuses to strip it.
REAL_RESIDUE_TOL = 1e-10
# Relative tolerance for deciding that a sampled multiplier is Hermitian.
_HERMITIAN_TOL = 1e-12

Multiplier = Union[Callable[[tuple], np.ndarray], np.ndarray, complex, float]


@dataclass(frozen=True)
class Grid:
    """Periodic grid with ``N`` samples of period ``T`` along each of ``n`` axes."""

    n: int
    N: int
    T: float

    @property
    def h(self) -> float:
        return self.T / self.N

    @property
    def shape(self) -> tuple:
        return (self.N,) * self.n

    @property
    def size(self) -> int:
        return self.N**self.n

    @property
    def cell_volume(self) -> float:
        return self.h**self.n

    @cached_property
    def x(self) -> np.ndarray:
        """Sample points along one axis, ``-T/2 + j h``."""
        return -self.T / 2 + np.arange(self.N) * self.h

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        return np.arange(-self.N // 2, self.N // 2)

    @cached_property
    def xi(self) -> np.ndarray:
        """Dual frequencies along one axis, ``2 pi k / T``."""
        return 2 * np.pi * self.wavenumbers / self.T

    @cached_property
    def points(self) -> tuple:
        return tuple(np.meshgrid(*([self.x] * self.n), indexing="ij"))

    @cached_property
    def frequencies(self) -> tuple:
        return tuple(np.meshgrid(*([self.xi] * self.n), indexing="ij"))

    @cached_property
    def xi_squared(self) -> np.ndarray:
        return sum(w**2 for w in self.frequencies)

    @cached_property
    def radius(self) -> np.ndarray:
        """``|x|`` at every sample point."""
        return np.sqrt(sum(p**2 for p in self.points))

    @cached_property
    def _sign(self) -> np.ndarray:
        # e^{-i xi_k x_0} with x_0 = -T/2 is exactly (-1)^k
        s1 = np.where(self.wavenumbers % 2 == 0, 1.0, -1.0)
        out = s1
        for _ in range(self.n - 1):
            out = np.multiply.outer(out, s1)
        return out


def make_grid(n: int, N: int, T: float) -> Grid:
    """Validate and build a :class:`Grid`.

    Raises
    ------
    ValueError
        If ``n`` is not 1 or 2, ``N`` is not a power of two at least 8, or
        ``T`` is not positive.
    """
    if n not in (1, 2):
        raise ValueError(f"dimension n must be 1 or 2, got {n!r}")
    if int(N) != N or N < 8 or (int(N) & (int(N) - 1)) != 0:
        raise ValueError(f"resolution N must be a power of two >= 8, got {N!r}")
    if not np.isfinite(T) or T <= 0:
        raise ValueError(f"period T must be positive, got {T!r}")
    return Grid(int(n), int(N), float(T))


@dataclass(frozen=True, eq=False)
class Field:
    """Complex samples of a function on a grid.

    ``real_valued`` marks fields whose physical values are real; operations
    that preserve realness assert the imaginary residue is negligible and
    strip it.
    """

    grid: Grid
    values: np.ndarray
    representation: str = PHYSICAL
    real_valued: bool = False

    def __post_init__(self):
        if self.representation not in (PHYSICAL, SPECTRAL):
            raise ValueError(f"unknown representation {self.representation!r}")
        values = np.array(self.values, dtype=complex)
        if values.shape != self.grid.shape:
            raise ValueError(
                f"values of shape {values.shape} do not match grid shape {self.grid.shape}"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid: Grid, func, real_valued=None) -> "Field":
        """Sample ``func(*points)`` on the grid."""
        vals = np.asarray(func(*grid.points))
        vals = np.broadcast_to(vals, grid.shape)
        if real_valued is None:
            real_valued = not np.iscomplexobj(vals)
        return cls(grid, vals, PHYSICAL, real_valued)

    def _check_compatible(self, other: "Field"):
        if other.grid != self.grid:
            raise ValueError("fields live on different grids")
        if other.representation != self.representation:
            raise ValueError("fields have different representations")

    def __add__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return Field(self.grid, self.values + other.values, self.representation,
                     self.real_valued and other.real_valued)

    def __sub__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return Field(self.grid, self.values - other.values, self.representation,
                     self.real_valued and other.real_valued)

    def __mul__(self, scalar) -> "Field":
        if isinstance(scalar, Field):
            self._check_compatible(scalar)
            if self.representation != PHYSICAL:
                raise ValueError("pointwise products are defined on physical fields")
            return Field(self.grid, self.values * scalar.values, PHYSICAL,
                         self.real_valued and scalar.real_valued)
        real = self.real_valued and np.isreal(scalar)
        return Field(self.grid, self.values * scalar, self.representation, bool(real))

    __rmul__ = __mul__

    def __neg__(self) -> "Field":
        return Field(self.grid, -self.values, self.representation, self.real_valued)

    def sup(self) -> float:
        return float(np.max(np.abs(self.values)))


def zeros(grid: Grid) -> Field:
    return Field(grid, np.zeros(grid.shape), PHYSICAL, True)


def forward_transform(f: Field) -> Field:
    """Physical samples to spectral samples approximating the Fourier transform."""
    if f.representation != PHYSICAL:
        raise ValueError("forward_transform expects a physical field")
    g = f.grid
    spec = np.fft.fftshift(np.fft.fftn(f.values)) * g._sign * g.cell_volume
    if f.real_valued:
        # rounding breaks exact symmetry; large multipliers would amplify it
        spec = 0.5 * (spec + np.conj(_reflect(spec)))
    return Field(g, spec, SPECTRAL, f.real_valued)


def inverse_transform(F: Field) -> Field:
    """Exact discrete inverse of :func:`forward_transform`."""
    if F.representation != SPECTRAL:
        raise ValueError("inverse_transform expects a spectral field")
    g = F.grid
    vals = np.fft.ifftn(np.fft.ifftshift(F.values * g._sign)) / g.cell_volume
    if F.real_valued:
        vals = _strip_imaginary(vals)
    return Field(g, vals, PHYSICAL, F.real_valued)


def _strip_imaginary(vals: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(vals))
    residue = np.max(np.abs(vals.imag))
    if scale > 0 and residue > REAL_RESIDUE_TOL * scale:
        raise AssertionError(
            f"imaginary residue {residue:.3e} exceeds {REAL_RESIDUE_TOL:g} of sup {scale:.3e}"
        )
    return vals.real.astype(complex)


def lp_norm(f: Field, p: float) -> float:
    """Discrete L^p norm ``(h^n sum |f_j|^p)^(1/p)``; ``p = inf`` gives the max."""
    if f.representation != PHYSICAL:
        raise ValueError("lp_norm expects a physical field")
    if not p >= 1:
        raise ValueError(f"exponent p must lie in [1, inf], got {p!r}")
    a = np.abs(f.values)
    top = float(np.max(a))
    if p == np.inf or top == 0.0:
        return top
    if p == 1:
        return float(f.grid.cell_volume * np.sum(a))
    # scaled to keep large exponents from overflowing
    return top * float(f.grid.cell_volume * np.sum((a / top) ** p)) ** (1.0 / p)


def conjugate_exponent(p: float) -> float:
    if p == 1:
        return np.inf
    if p == np.inf:
        return 1.0
    return p / (p - 1.0)


def sample_multiplier(grid: Grid, m: Multiplier) -> np.ndarray:
    """Evaluate a multiplier at every grid frequency (spectral order)."""
    if callable(m):
        vals = np.asarray(m(grid.frequencies), dtype=complex)
    else:
        vals = np.asarray(m, dtype=complex)
    vals = np.broadcast_to(vals, grid.shape)
    if not np.all(np.isfinite(vals)):
        raise ValueError("multiplier is not finite at every grid frequency")
    return vals


def _reflect(a: np.ndarray) -> np.ndarray:
    # index i <-> wavenumber i - N/2; k -> -k maps i -> N - i (mod N)
    for axis in range(a.ndim):
        a = np.roll(np.flip(a, axis=axis), 1, axis=axis)
    return a


def is_hermitian(mult: np.ndarray) -> bool:
    """True if ``m(-xi) = conj(m(xi))`` on the grid, i.e. ``m`` maps real to real."""
    scale = np.max(np.abs(mult))
    if scale == 0:
        return True
    return bool(np.max(np.abs(mult - np.conj(_reflect(mult)))) <= _HERMITIAN_TOL * scale)


def apply_multiplier(f: Field, m: Multiplier) -> Field:
    """Return ``inverse_transform(m * forward_transform(f))``.

    ``m`` is a callable receiving the tuple of frequency meshes, a sampled
    array in spectral order, or a scalar.  A real-valued input passed through
    a Hermitian multiplier (real even ones included) stays real-valued.
    """
    if f.representation != PHYSICAL:
        raise ValueError("apply_multiplier expects a physical field")
    mult = sample_multiplier(f.grid, m)
    F = forward_transform(f)
    real = f.real_valued and is_hermitian(mult)
    return inverse_transform(Field(f.grid, F.values * mult, SPECTRAL, real))


def random_band_limited(grid: Grid, seed: int, a: float) -> Field:
    """Seeded real-valued random field with algebraically decaying spectrum.

    Coefficients are uniform on the centred unit square ``[-1/2, 1/2]^2`` of
    the complex plane, scaled by ``(1 + |k|^2)^(-a)``, Hermitian-symmetrized,
    and zeroed on the top quarter of wavenumbers along each axis (Nyquist
    included).
    """
    if not a > 0:
        raise ValueError(f"decay a must be positive, got {a!r}")
    rng = np.random.default_rng(seed)
    c = rng.uniform(-0.5, 0.5, grid.shape) + 1j * rng.uniform(-0.5, 0.5, grid.shape)
    ks = np.meshgrid(*([grid.wavenumbers] * grid.n), indexing="ij")
    c = c * (1.0 + sum(k**2 for k in ks)) ** (-a)
    c = 0.5 * (c + np.conj(_reflect(c)))
    cutoff = 3 * grid.N // 8
    for k in ks:
        c[np.abs(k) >= cutoff] = 0.0
    return inverse_transform(Field(grid, c, SPECTRAL, True))
