"""Mollifiers as approximate identities.

phi_R(x) = R^n phi(R x) has unit mass for every R and concentrates as R grows,
so phi_R * f -> f.  The compact bump needs its support radius 1/R to span a few
grid cells; the gaussian has no such limit.
"""

from wonglab import lp_norm, make_grid, make_mollifier, mollify
from wonglab.catalog import named_field

grid = make_grid(1, 65536, 40.0)
f = named_field("gabor_sin", grid)

print(" R     bump error    gaussian error")
for R in (1, 4, 16, 64, 256):
    errs = [lp_norm(mollify(f, make_mollifier(kind, R, grid)) - f, float("inf")) / f.sup()
            for kind in ("bump", "gaussian")]
    print(f"{R:>4}   {errs[0]:.3e}     {errs[1]:.3e}")

try:
    make_mollifier("bump", 4096, grid)
except ValueError as exc:
    print("\nunder-resolved bump rejected:", exc)
