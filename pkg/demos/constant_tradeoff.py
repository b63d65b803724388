"""How epsilon and C trade off as the mollifier sharpens.

epsilon(R) decays roughly like 1/R and C(R) grows roughly like R for s = 1,
t = 2.  Asking for a target epsilon picks the first scale that reaches it.
The fine grid keeps the bump resolved up to R = 64.
"""

import numpy as np

from wonglab import constant_tradeoff_sweep, make_grid

grid = make_grid(1, 65536, 40.0)
Rs = [2.0**k for k in range(7)]
sweep = constant_tradeoff_sweep(1.0, 2.0, Rs, "bump", grid, target=0.02)

print("    R     epsilon          C")
for R, eps, c in sweep.rows:
    print(f"{R:5g}   {eps:.6f}   {c:10.4f}")

eps = np.array([r[1] for r in sweep.rows])
cs = np.array([r[2] for r in sweep.rows])
print("\nlog-log slope of epsilon:", f"{np.polyfit(np.log(Rs), np.log(eps), 1)[0]:.3f}")
print("log-log slope of C      :", f"{np.polyfit(np.log(Rs), np.log(cs), 1)[0]:.3f}")
print("first R with epsilon <= 0.02:", sweep.witness[0])
