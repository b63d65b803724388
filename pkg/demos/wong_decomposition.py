"""Splitting a test function against two Bessel orders.

For 0 < s < t, a scale R and 1 <= q <= inf, every phi splits as

    phi = (delta - phi_R) * L_{t} * J_{-t} phi  +  phi_R * phi
        =        part1                        +   part2

and Young's inequality bounds the two parts separately:

    ||J_{-s} phi||_q <= epsilon ||J_{-t} phi||_q + C ||phi||_q

with epsilon = ||(delta - phi_R) * L_{t-s}||_1 and C = ||L_{-s} * phi_R||_1.
Larger R lowers epsilon and raises C.
"""

import math

from wonglab import WongParams, make_grid, make_mollifier, verify_wong
from wonglab.catalog import catalog

grid = make_grid(1, 4096, 40.0)
fields = catalog(grid, ["gaussian", "hermite2", "sech2"], random_count=2)

for R in (2, 8, 32):
    moll = make_mollifier("gaussian", R, grid)
    print(f"\nR = {R}")
    print(f"{'test function':<16}{'q':>5}{'lhs':>12}{'rhs':>12}{'margin':>12}")
    for name, phi in fields:
        for q in (2, math.inf):
            row = verify_wong(phi, WongParams(1.0, 2.0, q, R, "gaussian"), name, moll)
            print(f"{name:<16}{q:>5}{row.lhs:>12.4g}{row.rhs:>12.4g}{row.margin:>12.4g}")
    print(f"epsilon = {row.epsilon:.4g}, C = {row.c:.4g}")
