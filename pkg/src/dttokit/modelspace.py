"""Orthonormal bases, reproducing kernels and projections for model spaces.

The model space of a finite Blaschke product u of degree d is the
d-dimensional space H^2 (-) u H^2.  It is realized here through the
Takenaka-Malmquist basis

    e_k(z) = sqrt(1 - |lam_k|^2) / (1 - conj(lam_k) z) * prod_{i<k} b_{lam_i}(z),

which is orthonormal in exact arithmetic, uses the zeros in the order
given, and reduces to the monomials {1, z, ..., z^{d-1}} when u = z^d.
"""

from dataclasses import dataclass

import numpy as np

from .fourier import (
    BlaschkeProduct,
    FourierWindow,
    blaschke_factor_coeffs,
    delta_window,
    geometric_window,
    window_inner_product,
    window_multiply,
    window_scale,
    _factor_width,
)

GRAM_DEFECT_LIMIT = 1e-10


@dataclass(frozen=True)
class ModelBasis:
    """Takenaka-Malmquist basis of a finite-dimensional model space."""

    inner: BlaschkeProduct
    basis: tuple
    dim: int

    def window_width(self) -> int:
        return max(e.hi for e in self.basis)

    def max_tail(self) -> float:
        return max(e.tail_bound for e in self.basis)

    def to_json(self) -> dict:
        # debugging aid, not a stability-guaranteed format
        return {
            "dim": self.dim,
            "windows": [
                {
                    "offset": e.offset,
                    "coeffs": [[c.real, c.imag] for c in e.coeffs],
                    "tail": e.tail_bound,
                }
                for e in self.basis
            ],
        }


def _build_windows(u: BlaschkeProduct, tol: float) -> list:
    budget = tol / (2.0 * (u.degree + 1))
    elements = []
    partial = delta_window(0)
    for lam in u.zeros:
        r = abs(lam)
        n_geom = _factor_width(r, budget) if r > 0 else 1
        geom = geometric_window(lam, n_geom)
        e = window_scale(window_multiply(geom, partial), np.sqrt(1.0 - r * r))
        elements.append(e)
        n_fac = _factor_width(r, budget) if r > 0 else 1
        partial = window_multiply(partial, blaschke_factor_coeffs(lam, n_fac))
    return elements


def gram_matrix(windows) -> np.ndarray:
    d = len(windows)
    g = np.empty((d, d), dtype=np.complex128)
    for j in range(d):
        for k in range(d):
            g[j, k] = window_inner_product(windows[k], windows[j])
    return g


def tm_basis(u: BlaschkeProduct, tol: float = 1e-12) -> ModelBasis:
    """Orthonormal Takenaka-Malmquist basis, expanded as certified windows.

    Widens the windows automatically if the numerical Gram defect exceeds
    the 1e-10 target.  Rejects constant inner functions (degree 0), whose
    model space is trivial.
    """
    if u.degree < 1:
        raise ValueError("inner function must be nonconstant (degree >= 1)")
    if tol <= 0:
        raise ValueError("tol must be positive")
    build_tol = tol
    for _ in range(4):
        elements = _build_windows(u, build_tol)
        defect = np.abs(gram_matrix(elements) - np.eye(u.degree)).max()
        if defect <= GRAM_DEFECT_LIMIT:
            return ModelBasis(u, tuple(elements), u.degree)
        build_tol /= 100.0
    raise RuntimeError("could not reach the Gram orthonormality target; zeros too extreme")


def reproducing_kernel(u: BlaschkeProduct, lam: complex, tol: float = 1e-12) -> FourierWindow:
    """Window of k_lam(z) = (1 - conj(u(lam)) u(z)) / (1 - conj(lam) z).

    Satisfies <f, k_lam> = f(lam) for every f in the model space.
    """
    lam = complex(lam)
    if abs(lam) >= 1.0:
        raise ValueError("kernel point must lie in the open unit disc")
    if tol <= 0:
        raise ValueError("tol must be positive")
    r = abs(lam)
    geom = geometric_window(lam, _factor_width(r, tol / 4.0) if r > 0 else 1)
    uw = u.window(tol / 4.0)
    prod = window_multiply(uw, geom)
    out = window_scale(prod, -np.conj(u(lam)))
    lo = min(geom.lo, out.lo)
    hi = max(geom.hi, out.hi)
    coeffs = np.zeros(hi - lo + 1, dtype=np.complex128)
    coeffs[geom.lo - lo : geom.hi - lo + 1] += geom.coeffs
    coeffs[out.lo - lo : out.hi - lo + 1] += out.coeffs
    return FourierWindow(lo, coeffs, geom.tail_bound + out.tail_bound)


def project_onto_model_space(basis: ModelBasis, f: FourierWindow) -> np.ndarray:
    """Coordinates <f, e_k> of the orthogonal projection onto the model space."""
    return np.array([window_inner_product(f, e) for e in basis.basis], dtype=np.complex128)


def synthesize(basis: ModelBasis, coords) -> FourierWindow:
    """Window of sum coords[k] e_k."""
    coords = np.asarray(coords, dtype=np.complex128)
    if coords.shape != (basis.dim,):
        raise ValueError("coordinate vector length must equal the basis dimension")
    out = window_scale(basis.basis[0], coords[0])
    for c, e in zip(coords[1:], basis.basis[1:]):
        scaled = window_scale(e, c)
        lo = min(out.lo, scaled.lo)
        hi = max(out.hi, scaled.hi)
        arr = np.zeros(hi - lo + 1, dtype=np.complex128)
        arr[out.lo - lo : out.hi - lo + 1] += out.coeffs
        arr[scaled.lo - lo : scaled.hi - lo + 1] += scaled.coeffs
        out = FourierWindow(lo, arr, out.tail_bound + scaled.tail_bound)
    return out
