"""Nested Bessel neighbourhoods and explicit splitting witnesses.

U_k = L_k * (unit ball of L^p).  For k < l < m an element f = J_l g of U_l
splits into f1 in epsilon U_k plus f2 in C U_m; the witness computes both
pieces and their certified norms.  The last part checks the duality pairing
that turns L^q norms into suprema over unit balls of L^p.
"""

import math

from wonglab import ScaleIndices, make_grid, make_mollifier
from wonglab.catalog import named_field
from wonglab.quasinorm import duality_gap, inclusion_witness, unit_ball_sample

grid = make_grid(1, 4096, 40.0)
moll = make_mollifier("bump", 8, grid)

for p in (1, 2, math.inf):
    sample = unit_ball_sample(0, p, grid)
    for idx in (ScaleIndices(0, 1, 2), ScaleIndices(0, 1, 3), ScaleIndices(1, 2, 4)):
        w = inclusion_witness(sample, idx, moll)
        print(f"p={p:<4} (k,l,m)=({idx.k},{idx.l},{idx.m})  "
              f"||J_-k f1|| = {w.bound1:.2e} <= eps = {w.epsilon:.4f}   "
              f"||J_-m f2|| = {w.bound2:.4f} <= C = {w.c:.4f}   split err {w.additivity_err:.1e}")

f = named_field("two_gaussians", grid)
print("\nduality gap with 50 random unit-ball samples only:",
      f"{duality_gap(f, 2, 50, include_extremizer=False):.3f}")
print("duality gap including the Hoelder extremizer     :", f"{duality_gap(f, 2, 50):.1e}")
