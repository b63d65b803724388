import math

import numpy as np
import pytest

from wonglab import catalog as cat
from wonglab.mollifiers import bump_normalization, make_mollifier, mollify
from wonglab.spectral_grid import Field, forward_transform, lp_norm, make_grid, random_band_limited
from scipy import integrate


@pytest.mark.parametrize("kind", ["bump", "gaussian"])
@pytest.mark.parametrize("R", [1, 2, 4, 8, 16])
def test_unit_mass_and_positivity(grid, kind, R):
    m = make_mollifier(kind, R, grid)
    v = m.field.values
    assert abs(grid.h * np.sum(v.real) - 1) <= 1e-14
    assert np.all(v.real >= 0) and np.all(v.imag == 0)
    assert lp_norm(m.field, 1) == pytest.approx(1, abs=1e-10)
    assert abs(m.spectrum[grid.N // 2] - 1) <= 1e-12  # xi = 0 bin


def test_unit_l1_up_to_64():
    g = make_grid(1, 65536, 40.0)
    for R in (1, 2, 4, 8, 16, 32, 64):
        m = make_mollifier("bump", R, g)
        assert abs(lp_norm(m.field, 1) - 1) <= 1e-10


def test_profile_mass_close_to_one(grid):
    # the bump's essential singularity at |x| = 1 slows convergence of the sampled sum
    assert make_mollifier("bump", 2, grid).profile_mass == pytest.approx(1, abs=1e-8)
    assert make_mollifier("gaussian", 2, grid).profile_mass == pytest.approx(1, abs=1e-12)


def test_bump_normalization_2d():
    c = bump_normalization(2)
    val, _ = integrate.dblquad(lambda y, x: c * np.exp(-1 / (1 - x * x - y * y)) if x * x + y * y < 1 else 0.0,
                               -1, 1, lambda x: -math.sqrt(1 - x * x), lambda x: math.sqrt(1 - x * x))
    assert val == pytest.approx(1, abs=1e-7)


def test_bump_support(grid):
    m = make_mollifier("bump", 2, grid)
    outside = np.abs(grid.x) > 0.5
    assert np.all(m.field.values[outside] == 0)
    assert np.all(m.field.values[np.abs(grid.x) < 0.49].real > 0)


def test_bump_2d(grid2d):
    m = make_mollifier("bump", 0.5, grid2d)
    assert np.all(m.field.values[grid2d.radius >= 2] == 0)
    assert abs(grid2d.cell_volume * np.sum(m.field.values.real) - 1) <= 1e-14


@pytest.mark.parametrize("kind,R", [("bump", 0), ("gaussian", -1), ("bump", 64), ("cauchy", 1)])
def test_rejects(grid, kind, R):
    with pytest.raises(ValueError):
        make_mollifier(kind, R, grid)


def test_identity_kind(grid):
    m = make_mollifier("identity", None, grid)
    assert np.isinf(m.R)
    assert np.all(forward_transform(m.field).values == 1)
    assert np.all(m.spectrum == 1)


def test_mollify_constant(grid):
    one = Field(grid, np.ones(grid.shape), real_valued=True)
    for kind in ("bump", "gaussian"):
        out = mollify(one, make_mollifier(kind, 4, grid))
        assert np.max(np.abs(out.values - 1)) <= 1e-10


def test_mollify_linear(grid):
    f, g = random_band_limited(grid, 1, 2.0), random_band_limited(grid, 2, 1.0)
    m = make_mollifier("bump", 8, grid)
    lhs = mollify(f + g, m)
    rhs = mollify(f, m) + mollify(g, m)
    assert (lhs - rhs).sup() <= 1e-13 * max(lhs.sup(), 1)


def test_mollify_grid_mismatch(grid, small_grid):
    with pytest.raises(ValueError):
        mollify(cat.named_field("gaussian", small_grid), make_mollifier("gaussian", 1, grid))


def test_approximate_identity():
    g = make_grid(1, 65536, 40.0)
    f = cat.named_field("gabor_sin", g)
    errs = {}
    for R in (64, 256):
        out = mollify(f, make_mollifier("bump", R, g))
        errs[R] = lp_norm(out - f, 2) / lp_norm(f, 2)
    assert errs[64] <= 2e-2
    assert errs[256] <= 1e-3
    # second-moment rate: quadrupling R cuts the error by about 16
    assert errs[64] / errs[256] == pytest.approx(16, rel=0.05)


def test_young_contraction(full_catalog, grid):
    for kind, Rs in (("bump", (1, 4, 16)), ("gaussian", (1, 8, 64))):
        for R in Rs:
            m = make_mollifier(kind, R, grid)
            for _, f in full_catalog:
                out = mollify(f, m)
                for p in (1, 2, math.inf):
                    assert lp_norm(out, p) <= (1 + 1e-8) * lp_norm(f, p)


def _sweep_errors(f, kind, Rs, grid):
    return [lp_norm(mollify(f, make_mollifier(kind, R, grid)) - f, 2) / lp_norm(f, 2) for R in Rs]


def test_error_decreases_with_scale(full_catalog, grid):
    Rs = [2.0**k for k in range(7)]
    for _, f in full_catalog:
        errs = _sweep_errors(f, "gaussian", Rs, grid)
        assert all(b <= a + 1e-10 for a, b in zip(errs, errs[1:]))


def test_bump_error_decreases_with_scale():
    g = make_grid(1, 16384, 40.0)
    Rs = [2.0**k for k in range(7)]
    for _, f in cat.catalog(g):
        errs = _sweep_errors(f, "bump", Rs, g)
        assert all(b <= a + 1e-10 for a, b in zip(errs, errs[1:]))
