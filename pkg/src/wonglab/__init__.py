"""Bessel potentials on periodic grids and constructive checks of a mollifier interpolation inequality."""

from .bessel import (
    bessel_multiplier,
    bessel_potential,
    derivative_factorization_check,
    kernel_mass,
    seminorm,
    verify_group_law,
)
from .mollifiers import Mollifier, make_mollifier, mollify
from .quasinorm import (
    ScaleIndices,
    UnitBallSample,
    duality_gap,
    inclusion_witness,
    unit_ball_sample,
)
from .spectral_grid import (
    Field,
    Grid,
    apply_multiplier,
    forward_transform,
    inverse_transform,
    lp_norm,
    make_grid,
    random_band_limited,
)
from .wong import (
    SweepRow,
    WongConstants,
    WongParams,
    c_constant,
    constant_tradeoff_sweep,
    decompose,
    epsilon_constant,
    verify_wong,
)

__version__ = "0.1.0"
