"""Minimum moduli from finite matrices, with theorem-backed shortcuts.

For a finite matrix the minimum modulus inf_{|x|=1} |Mx| is the smallest
singular value (zero whenever the matrix is wider than tall).  Galerkin
compressions of non-invertible infinite-dimensional operators can show
spurious small singular values, so the exact finite-dimensional routes
through the model space are the authoritative computations here and
:func:`galerkin_sweep` serves as a consistency probe only.
"""

import json
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .fourier import (
    BlaschkeProduct,
    BlaschkeQuotient,
    SymbolClassError,
    SymbolExpr,
    conjugated,
    is_analytic,
    is_unimodular,
    project_analytic,
    symbol_to_window,
    window_conjugate,
    window_multiply,
)
from .modelspace import ModelBasis, tm_basis
from .operators import (
    OperatorMatrix,
    corner_images,
    corner_gram,
    truncated_toeplitz,
    _gram,
)

RANK_TOL_DEFAULT = 1e-8


@dataclass(frozen=True)
class MinModReport:
    """A computed minimum modulus with its provenance and error data."""

    value: float
    method: str  # finite_exact | galerkin_sweep | oracle
    truncation: Optional[int] = None
    entry_error_bound: float = 0.0
    oracle_value: Optional[float] = None

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("minimum modulus cannot be negative")
        if self.method not in ("finite_exact", "galerkin_sweep", "oracle"):
            raise ValueError(f"unknown method tag: {self.method!r}")

    @property
    def discrepancy(self) -> Optional[float]:
        if self.oracle_value is None:
            return None
        return abs(self.value - self.oracle_value)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "truncation": self.truncation,
            "oracle": self.oracle_value,
            "discrepancy": self.discrepancy,
            "entry_error": self.entry_error_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# singular-value primitives


def sigma_min(mat: OperatorMatrix) -> float:
    """inf |Mx| over unit input vectors: zero for wide matrices, else the
    smallest singular value.  Carries the entry_error * sqrt(rows*cols)
    perturbation caveat of its OperatorMatrix."""
    m, n = mat.shape
    if m < n:
        return 0.0
    return float(np.linalg.svd(mat.entries, compute_uv=False)[-1])


def sigma_max(mat: OperatorMatrix) -> float:
    return float(np.linalg.svd(mat.entries, compute_uv=False)[0])


def reduced_min_modulus(mat: OperatorMatrix, rank_tol: float = RANK_TOL_DEFAULT) -> float:
    """Smallest singular value above the kernel cutoff.

    ``rank_tol`` is scaled by the matrix norm.  If every singular value
    falls below the cutoff the compression is degenerate: a warning is
    issued and 0 is returned.
    """
    if rank_tol <= 0:
        raise ValueError("rank_tol must be positive")
    s = np.linalg.svd(mat.entries, compute_uv=False)
    cutoff = rank_tol * max(1.0, float(s[0]))
    above = s[s > cutoff]
    if above.size == 0:
        warnings.warn("all singular values fall below rank_tol; degenerate compression")
        return 0.0
    return float(above[-1])


@dataclass(frozen=True)
class AdjointCheck:
    sigma_min: float
    sigma_min_adjoint: float
    kernel_dim: int
    cokernel_dim: int
    rank_tol: float

    @property
    def max_deviation(self) -> float:
        return abs(self.sigma_min - self.sigma_min_adjoint)


def check_minmod_adjoint(mat: OperatorMatrix, rank_tol: float = RANK_TOL_DEFAULT) -> AdjointCheck:
    """Verify sigma_min(M) = sigma_min(M*) and report numerical kernel dims.

    For square matrices the equality is automatic (singular values of M and
    M* coincide); it is the finite-dimensional shadow of the statement that
    equal kernel dimensions force equal minimum moduli.
    """
    m, n = mat.shape
    if m != n:
        raise ValueError("adjoint check expects a square matrix")
    s = np.linalg.svd(mat.entries, compute_uv=False)
    cutoff = rank_tol * max(1.0, float(s[0]))
    k = int(np.sum(s <= cutoff))
    s_adj = np.linalg.svd(mat.entries.conj().T, compute_uv=False)
    return AdjointCheck(float(s[-1]), float(s_adj[-1]), k, k, rank_tol)


# ---------------------------------------------------------------------------
# theorem-backed routes for m(D_phi), unimodular phi


def _require_unimodular(phi: SymbolExpr):
    if not is_unimodular(phi):
        raise SymbolClassError("this route requires a unimodular symbol")


def _require_nonconstant(u: BlaschkeProduct):
    if u.degree < 1:
        raise SymbolClassError("inner function must be nonconstant")


def min_modulus_unimodular(
    u: BlaschkeProduct, phi: SymbolExpr, tol: float = 1e-12, basis: Optional[ModelBasis] = None
) -> MinModReport:
    """m(D_phi) for unimodular phi, via the exact dim(K_u) reduction.

    Isometry of M_phi gives m(D_phi) = m(A_{conj(phi)}), so the value is
    the smallest singular value of the truncated Toeplitz matrix of
    conj(phi) on the model space: a dim x dim computation, no truncation.
    """
    _require_unimodular(phi)
    _require_nonconstant(u)
    if basis is None:
        basis = tm_basis(u, tol)
    a = truncated_toeplitz(basis, conjugated(phi), tol)
    return MinModReport(sigma_min(a), "finite_exact", None, a.sv_perturbation())


def min_modulus_toeplitz_hankel(
    u: BlaschkeProduct, phi: SymbolExpr, tol: float = 1e-12, basis: Optional[ModelBasis] = None
) -> MinModReport:
    """m(D_phi) for unimodular phi through the corner Gram route.

    Computes sqrt(1 - lambda_max(G)) where G is the Gram of the images
    (T_{conj(u phi)} e_k, H_{conj(phi)} e_k).  Independent of
    :func:`min_modulus_unimodular`; the two must agree within the
    combined entry error.
    """
    _require_unimodular(phi)
    _require_nonconstant(u)
    if basis is None:
        basis = tm_basis(u, tol)
    g = corner_gram(basis, conjugated(phi), tol)
    lam_max = float(np.linalg.eigvalsh(g.entries)[-1])
    value = float(np.sqrt(max(0.0, 1.0 - lam_max)))
    return MinModReport(value, "finite_exact", None, g.sv_perturbation())


def min_modulus_bounds(
    u: BlaschkeProduct, phi: SymbolExpr, tol: float = 1e-12, basis: Optional[ModelBasis] = None
):
    """Two-sided bounds on m(D_phi) from the restricted operator norms.

    lower = sqrt(max(0, 1 - (|T|^2 + |H|^2))) and
    upper = min(sqrt(1 - |T|^2), sqrt(1 - |H|^2)), where T and H are the
    corner pieces T_{conj(u phi)} and H_{conj(phi)} restricted to K_u.
    """
    _require_unimodular(phi)
    _require_nonconstant(u)
    if basis is None:
        basis = tm_basis(u, tol)
    t_imgs, h_imgs = corner_images(basis, conjugated(phi), tol)
    t_sq = float(np.linalg.eigvalsh(_gram(t_imgs))[-1])
    h_sq = float(np.linalg.eigvalsh(_gram(h_imgs))[-1])
    lower = float(np.sqrt(max(0.0, 1.0 - (t_sq + h_sq))))
    upper = float(
        min(np.sqrt(max(0.0, 1.0 - t_sq)), np.sqrt(max(0.0, 1.0 - h_sq)))
    )
    return lower, upper


def min_modulus_corner(
    u: BlaschkeProduct, phi: SymbolExpr, tol: float = 1e-12, basis: Optional[ModelBasis] = None
) -> MinModReport:
    """Minimum modulus of the corner operator P_{K_u^perp} M_phi |_{K_u}.

    Unimodular phi: sqrt(1 - |A_phi|^2).  Analytic phi: the smallest
    singular value of T_{conj(u) phi} restricted to K_u, via its Gram.
    Inner phi admits both; the Hankel-norm route sqrt(1 - |H_{conj(u) phi}|^2)
    is attached as the oracle cross-value.
    """
    _require_nonconstant(u)
    unimod = is_unimodular(phi)
    analytic = is_analytic(phi)
    if not (unimod or analytic):
        raise SymbolClassError("corner route requires a unimodular or analytic symbol")
    if basis is None:
        basis = tm_basis(u, tol)
    if unimod:
        a = truncated_toeplitz(basis, phi, tol)
        s = sigma_max(a)
        value = float(np.sqrt(max(0.0, 1.0 - s * s)))
        oracle = None
        if analytic:
            from .oracle import truncated_toeplitz_norm_hankel

            h = truncated_toeplitz_norm_hankel(u, phi, size=basis.window_width() + 16, tol=tol)
            oracle = float(np.sqrt(max(0.0, 1.0 - h * h)))
        return MinModReport(value, "finite_exact", None, a.sv_perturbation(), oracle)
    t_imgs, _ = corner_images(basis, phi, tol)
    g = _gram(t_imgs)
    lam_min = float(np.linalg.eigvalsh(g)[0])
    value = float(np.sqrt(max(0.0, lam_min)))
    err = max(img.tail_bound for img in t_imgs) * 2.0 * basis.dim
    return MinModReport(value, "finite_exact", None, err)


def _divides(u: BlaschkeProduct, phi: BlaschkeQuotient, atol: float = 1e-12) -> bool:
    """Whether u divides phi as inner functions (zero multisets match)."""
    if phi.z_power < 0:
        return False
    pool = list(phi.zeros) + [0.0 + 0.0j] * phi.z_power
    for lam in u.zeros:
        hit = next((i for i, mu in enumerate(pool) if abs(mu - lam) <= atol), None)
        if hit is None:
            return False
        pool.pop(hit)
    return True


def min_modulus_inner_symbol(
    u: BlaschkeProduct, phi: SymbolExpr, tol: float = 1e-12, basis: Optional[ModelBasis] = None
) -> MinModReport:
    """m(D_phi) for an inner symbol: m(T_{conj(phi)} restricted to K_u).

    When every zero of u appears in phi (with multiplicity) the value is
    exactly 0 by divisibility; the report then carries method ``oracle``.
    """
    _require_nonconstant(u)
    if not isinstance(phi, BlaschkeQuotient) or phi.z_power < 0:
        raise SymbolClassError("inner-symbol route requires a Blaschke-quotient inner function")
    if _divides(u, phi):
        return MinModReport(0.0, "oracle", None, 0.0, 0.0)
    if basis is None:
        basis = tm_basis(u, tol)
    phibar_w = symbol_to_window(conjugated(phi), -basis.window_width() - 1, basis.window_width() + 1, tol)
    imgs = [project_analytic(window_multiply(phibar_w, e)) for e in basis.basis]
    lam_min = float(np.linalg.eigvalsh(_gram(imgs))[0])
    err = max(img.tail_bound for img in imgs) * 2.0 * basis.dim
    return MinModReport(float(np.sqrt(max(0.0, lam_min))), "finite_exact", None, err)


# ---------------------------------------------------------------------------
# Galerkin sweep (consistency probe)


def _dtto_rectangular(
    u: BlaschkeProduct, phi: SymbolExpr, n: int, tol: float
) -> OperatorMatrix:
    """Rectangular block of the dual truncated Toeplitz operator: all 2n
    input monomials, output window widened until the certified image tail
    of every input basis vector is <= tol/sqrt(n)."""
    col_tol = tol / np.sqrt(max(1, n))
    phi_w = symbol_to_window(phi, -2 * n, 2 * n, col_tol / 2.0)
    uw = u.window(col_tol / 2.0)
    u_phi = window_multiply(uw, phi_w)
    u_phibar = window_multiply(uw, window_conjugate(phi_w))
    width = max(abs(phi_w.lo), phi_w.hi, abs(u_phi.lo), u_phi.hi, abs(u_phibar.lo), u_phibar.hi)
    m = n + width + 1
    a = np.zeros((2 * m, 2 * n), dtype=np.complex128)
    for j in range(m):
        for k in range(n):
            a[j, k] = phi_w.coeff_at(j - k)
    for k in range(m):
        for i in range(1, n + 1):
            a[k, n + i - 1] = np.conj(u_phibar.coeff_at(-k - i))
    for j in range(1, m + 1):
        for k in range(n):
            a[m + j - 1, k] = u_phi.coeff_at(-j - k)
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            a[m + j - 1, n + i - 1] = phi_w.coeff_at(i - j)
    err = max(phi_w.tail_bound, u_phi.tail_bound, u_phibar.tail_bound)
    return OperatorMatrix(
        a,
        f"uH2[z^0..z^{n - 1}] (+) H2-[zbar^1..zbar^{n}]",
        f"uH2[z^0..z^{m - 1}] (+) H2-[zbar^1..zbar^{m}]",
        err,
    )


def galerkin_sweep(
    u: BlaschkeProduct,
    phi: SymbolExpr,
    schedule: Sequence[int],
    tol: float = 1e-9,
    threads: int = 1,
) -> list:
    """Minimum modulus of rectangular compressions over growing subspaces.

    Each value is (up to tol) an upper bound on m(D_phi) and the sequence
    is non-increasing within 2 tol.  This is a consistency probe for the
    theorem-backed routes, not an authoritative computation.
    """
    schedule = [int(n) for n in schedule]
    if not schedule:
        raise ValueError("schedule must be nonempty")
    if any(n < 1 for n in schedule):
        raise ValueError("truncations must be >= 1")
    _require_nonconstant(u)

    def one(n: int) -> MinModReport:
        block = _dtto_rectangular(u, phi, n, tol)
        return MinModReport(sigma_min(block), "galerkin_sweep", n, block.sv_perturbation())

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, schedule))
    return [one(n) for n in schedule]
