"""Where does frequent measurement freeze the atom?

Scans the survival-rate functional F(theta, phi) over all measurement
directions for a squeezed bath with N=1, psi=0, and compares the two
maxima found on the grid with the closed-form preferential angles.
F <= 0 everywhere; the frozen directions are exactly the zeros.
"""

import numpy as np

from squeezed_zeno import (
    BathParams,
    find_zeno_directions_grid,
    survival_functional_grid,
    zeno_directions,
)

bath = BathParams.maximal(gamma=1.0, n=1.0, psi=0.0)

thetas, phis, f = survival_functional_grid(bath, 256, 256)
print(f"F range on the 256x256 grid: [{f.min():.4f}, {f.max():.3e}]")

closed = zeno_directions(bath)
print("\nclosed-form maxima:")
print(f"  cos(theta) = {np.cos(closed.theta):+.6f}  (theta = {closed.theta:.6f})")
print(f"  phi_1 = {closed.mu1.phi:.6f}  phi_2 = {closed.mu2.phi:.6f}")

print("\ngrid scan + polish:")
for d, value in find_zeno_directions_grid(bath):
    print(f"  theta = {d.theta:.6f}  phi = {d.phi:.6f}  F = {value:+.2e}")

print("\nBoth maxima sit at F = 0: measuring the spin component along either")
print("direction freezes the atom in the corresponding +1 eigenstate.")
