"""Bessel potentials on a periodic grid.

J_z multiplies the spectrum by (1 + |xi|^2)^(-z/2).  Positive orders smooth,
negative orders differentiate, and orders add: J_z J_w = J_{z+w}.  The kernel
of J_s with s > 0 is a probability density, so J_s never increases an L^p norm.
"""

import math

from wonglab import bessel_potential, kernel_mass, lp_norm, make_grid, verify_group_law
from wonglab.catalog import named_field

grid = make_grid(1, 4096, 40.0)
f = named_field("gabor_cos", grid)

print("group law  J_0.7 J_1.3 f  vs  J_2 f:", f"{verify_group_law(f, 0.7, 1.3):.2e}")
print("round trip J_-1 J_1 f     vs  f    :", f"{verify_group_law(f, -1.0, 1.0):.2e}")

print("\nkernel mass ||L_s||_1 (singular at the origin for small s):")
fine = make_grid(1, 16384, 80.0)
for s in (0.5, 1.0, 2.0, 4.0):
    print(f"  s = {s:<4}  {kernel_mass(s, fine):.8f}")

print("\nsmoothing shrinks every L^p norm:")
for s in (0.5, 1.0, 2.0):
    g = bessel_potential(f, s)
    ratios = [lp_norm(g, p) / lp_norm(f, p) for p in (1, 2, math.inf)]
    print(f"  s = {s}:  " + "  ".join(f"{r:.4f}" for r in ratios))
