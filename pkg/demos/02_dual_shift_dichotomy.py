"""The dual shift dichotomy: m is 0 when u(0) = 0, else |u(0)|.

The dual truncated Toeplitz operator with symbol z acts on the
complement of the model space.  Its minimum modulus collapses to zero as
soon as u vanishes at the origin (the kernel then contains zbar) and
equals |u(0)| otherwise.  A Galerkin sweep over growing compressions
sees both regimes.
"""

from dttokit import BlaschkeProduct, galerkin_sweep, oracle_m_dual_shift, shift_symbol

Z = shift_symbol(1)
SCHEDULE = [4, 8, 16, 32, 64]

for label, u in (
    ("u = z^2          ", BlaschkeProduct(1.0, (0.0, 0.0))),
    ("u = b_0.5        ", BlaschkeProduct(1.0, (0.5,))),
    ("u = b_0.3 * b_0.6", BlaschkeProduct(1.0, (0.3, 0.6))),
):
    reports = galerkin_sweep(u, Z, SCHEDULE, tol=1e-9)
    values = "  ".join(f"{r.value:.6f}" for r in reports)
    print(f"{label}  oracle = {oracle_m_dual_shift(u):.4f}")
    print(f"  N = {SCHEDULE}")
    print(f"  sweep: {values}")
    print()

print("The minimizing direction is the single coordinate zbar: it is inside")
print("every compression, so the sweep is flat at the exact value.")
