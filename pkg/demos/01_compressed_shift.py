"""The minimum modulus of a compressed shift is |u(0)|.

The compressed shift A_z on the model space of a finite Blaschke product
u satisfies the rank-one defect identity I - A*A = (S*u)(S*u)^*, which
pins its two singular values at 1 and |u(0)|.  This script builds the
matrix for a handful of random products and compares the smallest
singular value against the closed form.
"""

import numpy as np

from dttokit import (
    BlaschkeProduct,
    compressed_shift,
    oracle_m_compressed_shift,
    sigma_min,
    tm_basis,
)

rng = np.random.default_rng(7)

print(f"{'degree':>6} {'|u(0)|':>12} {'sigma_min':>14} {'deviation':>12}")
for _ in range(8):
    degree = int(rng.integers(1, 7))
    zeros = rng.uniform(0, 0.9, degree) * np.exp(1j * rng.uniform(0, 2 * np.pi, degree))
    u = BlaschkeProduct(1.0, tuple(zeros))
    value = sigma_min(compressed_shift(tm_basis(u)))
    target = oracle_m_compressed_shift(u)
    print(f"{degree:>6} {target:>12.8f} {value:>14.8f} {abs(value - target):>12.2e}")

print()
print("A zero at the origin forces |u(0)| = 0 and a nontrivial kernel:")
u = BlaschkeProduct(1.0, (0.0, 0.35))
print(f"  u = z * b_0.35:  sigma_min = {sigma_min(compressed_shift(tm_basis(u))):.2e}")
