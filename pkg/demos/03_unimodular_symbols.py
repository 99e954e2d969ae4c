"""Exact minimum moduli for unimodular symbols, two independent ways.

For |phi| = 1 a.e. the dual truncated Toeplitz operator has
m(D_phi) = m(A_{conj(phi)}): an exact dim(K_u) x dim(K_u) computation.
The same number falls out of the corner-operator Gram,
sqrt(1 - lambda_max), which exercises completely different code
(Toeplitz and Hankel images instead of a compression).
"""

import numpy as np

from dttokit import (
    BlaschkeProduct,
    BlaschkeQuotient,
    inner_symbol,
    min_modulus_bounds,
    min_modulus_toeplitz_hankel,
    min_modulus_unimodular,
    shift_symbol,
)

u = BlaschkeProduct(1.0, (0.0, 0.0))  # model space span{1, z}

print("phi = zbar * b_alpha on span{1, z}: both routes vs the 2x2 closed form")
print(f"{'alpha':>6} {'reduction':>12} {'corner gram':>12} {'closed form':>12}")
for alpha in (0.25, 0.5, 0.75):
    phi = BlaschkeQuotient(1.0, -1, (alpha,))
    v1 = min_modulus_unimodular(u, phi).value
    v2 = min_modulus_toeplitz_hankel(u, phi).value
    a = alpha**2 * (1 - alpha**2)
    b = alpha**3 * (1 - alpha**2)
    d = alpha**4 * (1 - alpha**2) + alpha**2
    lam = 0.5 * ((a + d) + np.sqrt((a - d) ** 2 + 4 * b * b))
    print(f"{alpha:>6.2f} {v1:>12.8f} {v2:>12.8f} {np.sqrt(1 - lam):>12.8f}")

print()
print("Degenerate endpoints of the theory:")
print(f"  phi = z on span{{1, z}}          -> {min_modulus_unimodular(u, shift_symbol(1)).value}")
u2 = BlaschkeProduct(1.0, (0.3, 0.6))
print(f"  phi = u (the symbol divides)   -> {min_modulus_unimodular(u2, inner_symbol(u2)).value:.2e}")
print(f"  phi = i (unimodular constant)  -> {min_modulus_unimodular(u2, BlaschkeQuotient(1j)).value}")

print()
lo, up = min_modulus_bounds(u2, BlaschkeQuotient(1.0, -1, (0.4,)))
exact = min_modulus_unimodular(u2, BlaschkeQuotient(1.0, -1, (0.4,))).value
print(f"Two-sided bounds bracket the exact value: {lo:.6f} <= {exact:.6f} <= {up:.6f}")
