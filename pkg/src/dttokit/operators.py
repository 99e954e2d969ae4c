"""Finite matrix realizations of the operators acting on and around K_u.

Builders cover the Toeplitz operator T_phi f = P(phi f), the Hankel
operator H_phi f = P_-(phi f), the dual Toeplitz operator
S_phi = P_- M_phi |_{H^2_-}, the truncated Toeplitz operator
A_phi = P_{K_u} M_phi |_{K_u}, the compressed shift A_z, the Gram of the
corner operator P_{K_u^perp} M_phi |_{K_u}, the 2x2 block compression of
a dual truncated Toeplitz operator, and the conjugation f -> u conj(z f).

Galerkin block ordering follows the unitary identification of K_u^perp
with H^2 (+) H^2_-: analytic coordinates {z^n}_{n=0..N-1} first (they
stand for {u z^n}), then the co-analytic {zbar^n}_{n=1..N}.
"""

import csv
import io
from dataclasses import dataclass

import numpy as np

from .fourier import (
    BlaschkeProduct,
    FourierWindow,
    SymbolExpr,
    conjugated,
    project_analytic,
    project_antianalytic,
    symbol_to_window,
    window_conjugate,
    window_inner_product,
    window_multiply,
    window_shift,
)
from .modelspace import ModelBasis


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense complex matrix with labeled bases and a per-entry error bound.

    Singular values computed downstream inherit the perturbation caveat
    entry_error * sqrt(rows * cols).
    """

    entries: np.ndarray
    in_basis: str
    out_basis: str
    entry_error: float = 0.0

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.complex128).copy()
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("matrix entries must form a nonempty 2-D array")
        if not (np.isfinite(self.entry_error) and self.entry_error >= 0.0):
            raise ValueError("entry_error must be finite and nonnegative")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "entry_error", float(self.entry_error))

    @property
    def shape(self):
        return self.entries.shape

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.entries.conj().T, self.out_basis, self.in_basis, self.entry_error)

    def sv_perturbation(self) -> float:
        m, n = self.shape
        return self.entry_error * float(np.sqrt(m * n))


def matrix_to_csv(mat: OperatorMatrix) -> str:
    """Row-major CSV; each cell is the quoted pair "re,im"."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    for row in mat.entries:
        writer.writerow([f"{c.real:.17g},{c.imag:.17g}" for c in row])
    return buf.getvalue()


def matrix_to_json(mat: OperatorMatrix) -> dict:
    return {
        "rows": mat.shape[0],
        "cols": mat.shape[1],
        "in_basis": mat.in_basis,
        "out_basis": mat.out_basis,
        "entry_error": mat.entry_error,
        "entries": [[[c.real, c.imag] for c in row] for row in mat.entries],
    }


# ---------------------------------------------------------------------------
# monomial-basis blocks (entries read straight off a symbol window)


def toeplitz_matrix(phi: SymbolExpr, rows: int, cols: int, tol: float = 1e-12) -> OperatorMatrix:
    """T_phi on monomials: entry (j, k) = phi_hat(j - k), 0-based both ways."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = symbol_to_window(phi, -(cols - 1), rows - 1, tol)
    a = np.empty((rows, cols), dtype=np.complex128)
    for j in range(rows):
        for k in range(cols):
            a[j, k] = w.coeff_at(j - k)
    return OperatorMatrix(a, f"H2[z^0..z^{cols - 1}]", f"H2[z^0..z^{rows - 1}]", w.tail_bound)


def hankel_matrix(phi: SymbolExpr, out_rows: int, cols: int, tol: float = 1e-12) -> OperatorMatrix:
    """H_phi: row j stands for zbar^{j+1}; entry (j, k) = phi_hat(-(j+1) - k)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = symbol_to_window(phi, -(out_rows + cols - 1), -1, tol)
    return _hankel_from_window(w, out_rows, cols)


def _hankel_from_window(w: FourierWindow, out_rows: int, cols: int) -> OperatorMatrix:
    a = np.empty((out_rows, cols), dtype=np.complex128)
    for j in range(1, out_rows + 1):
        for k in range(cols):
            a[j - 1, k] = w.coeff_at(-j - k)
    return OperatorMatrix(a, f"H2[z^0..z^{cols - 1}]", f"H2-[zbar^1..zbar^{out_rows}]", w.tail_bound)


def dual_toeplitz_matrix(phi: SymbolExpr, size: int, tol: float = 1e-12) -> OperatorMatrix:
    """S_phi on {zbar^j}_{j=1..size}: entry (j, k) = phi_hat(k - j)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = symbol_to_window(phi, -(size - 1), size - 1, tol)
    a = np.empty((size, size), dtype=np.complex128)
    for j in range(1, size + 1):
        for k in range(1, size + 1):
            a[j - 1, k - 1] = w.coeff_at(k - j)
    label = f"H2-[zbar^1..zbar^{size}]"
    return OperatorMatrix(a, label, label, w.tail_bound)


# ---------------------------------------------------------------------------
# model-space blocks


def _symbol_window_for_basis(phi: SymbolExpr, basis: ModelBasis, tol: float) -> FourierWindow:
    wb = basis.window_width()
    return symbol_to_window(phi, -wb - 1, wb + 1, tol)


def truncated_toeplitz(basis: ModelBasis, phi: SymbolExpr, tol: float = 1e-12) -> OperatorMatrix:
    """A_phi on the model space: entry (j, k) = <phi e_k, e_j>."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = _symbol_window_for_basis(phi, basis, tol)
    d = basis.dim
    images = [window_multiply(w, e) for e in basis.basis]
    a = np.empty((d, d), dtype=np.complex128)
    for j in range(d):
        for k in range(d):
            a[j, k] = window_inner_product(images[k], basis.basis[j])
    err = max(
        img.tail_bound * 1.0 + img.norm() * basis.max_tail() for img in images
    )
    label = f"K_u(dim={d})"
    return OperatorMatrix(a, label, label, err)


def compressed_shift(basis: ModelBasis, tol: float = 1e-12) -> OperatorMatrix:
    """The compressed shift A_z; satisfies I - A* A = (S* u)(S* u)^*."""
    d = basis.dim
    a = np.empty((d, d), dtype=np.complex128)
    shifted = [window_shift(e, 1) for e in basis.basis]
    for j in range(d):
        for k in range(d):
            a[j, k] = window_inner_product(shifted[k], basis.basis[j])
    err = 2.0 * basis.max_tail()
    label = f"K_u(dim={d})"
    return OperatorMatrix(a, label, label, err)


def corner_images(basis: ModelBasis, phi: SymbolExpr, tol: float = 1e-12):
    """Images (T_{conj(u) phi} e_k, H_phi e_k) of the corner decomposition.

    The corner operator P_{K_u^perp} M_phi |_{K_u} splits orthogonally into
    a part landing in u H^2 (carried by T_{conj(u) phi}) and a part landing
    in H^2_- (carried by H_phi).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    uw = basis.inner.window(tol)
    phi_w = _symbol_window_for_basis(phi, basis, tol)
    ubar_phi = window_multiply(window_conjugate(uw), phi_w)
    t_imgs = [project_analytic(window_multiply(ubar_phi, e)) for e in basis.basis]
    h_imgs = [project_antianalytic(window_multiply(phi_w, e)) for e in basis.basis]
    return t_imgs, h_imgs


def _gram(images) -> np.ndarray:
    d = len(images)
    g = np.empty((d, d), dtype=np.complex128)
    for j in range(d):
        for k in range(d):
            g[j, k] = window_inner_product(images[k], images[j])
    return g


def corner_gram(basis: ModelBasis, phi: SymbolExpr, tol: float = 1e-12) -> OperatorMatrix:
    """Gram matrix of the corner images; the matrix of B* B on the basis.

    For unimodular phi this equals I - A_phi* A_phi, since multiplication
    by phi is an isometry of L^2.
    """
    t_imgs, h_imgs = corner_images(basis, phi, tol)
    g = _gram(t_imgs) + _gram(h_imgs)
    err = max(
        2.0 * (t.tail_bound * max(t.norm(), 1.0) + h.tail_bound * max(h.norm(), 1.0))
        for t, h in zip(t_imgs, h_imgs)
    )
    label = f"K_u(dim={basis.dim})"
    return OperatorMatrix(g, label, label, err)


# ---------------------------------------------------------------------------
# dual truncated Toeplitz block


def _kperp_labels(n: int) -> str:
    return f"uH2[z^0..z^{n - 1}] (+) H2-[zbar^1..zbar^{n}]"


def dual_truncated_toeplitz(
    u: BlaschkeProduct, phi: SymbolExpr, n: int, tol: float = 1e-12
) -> OperatorMatrix:
    """2n x 2n Galerkin compression of the dual truncated Toeplitz operator.

    Blocks, in the analytic-first ordering:

        [ T_phi          H_{u conj(phi)}^* ]
        [ H_{u phi}      S_phi             ]
    """
    if n < 1:
        raise ValueError("truncation size must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    phi_w = symbol_to_window(phi, -2 * n, 2 * n, tol)
    uw = u.window(tol)
    u_phi = window_multiply(uw, phi_w)
    u_phibar = window_multiply(uw, window_conjugate(phi_w))

    a = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            a[j, k] = phi_w.coeff_at(j - k)
    for k in range(n):  # H_{u conj(phi)}^*: out z^k, in zbar^i
        for i in range(1, n + 1):
            a[k, n + i - 1] = np.conj(u_phibar.coeff_at(-k - i))
    for j in range(1, n + 1):  # H_{u phi}: out zbar^j, in z^k
        for k in range(n):
            a[n + j - 1, k] = u_phi.coeff_at(-j - k)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            a[n + j - 1, n + i - 1] = phi_w.coeff_at(i - j)
    err = max(phi_w.tail_bound, u_phi.tail_bound, u_phibar.tail_bound)
    label = _kperp_labels(n)
    return OperatorMatrix(a, label, label, err)


def conjugation_action(u: BlaschkeProduct, n: int, tol: float = 1e-12) -> OperatorMatrix:
    """Matrix M of the antilinear conjugation f -> u conj(z f) on K_u^perp.

    In the {u z^k} (+) {zbar^j} coordinates the map sends u z^k -> zbar^{k+1}
    and zbar^j -> u z^{j-1}, so it acts as x -> M conj(x) with M the block
    swap.  M is unitary, M conj(M) = I, and the compression is exact: the
    conjugation preserves both the retained subspace and its complement.
    """
    if n < 1:
        raise ValueError("truncation size must be >= 1")
    m = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    eye = np.eye(n)
    m[:n, n:] = eye
    m[n:, :n] = eye
    label = _kperp_labels(n)
    return OperatorMatrix(m, label, label, 0.0)


def apply_conjugation(conj_mat: OperatorMatrix, vec: np.ndarray) -> np.ndarray:
    """Apply the antilinear conjugation: x -> M conj(x)."""
    return conj_mat.entries @ np.conj(np.asarray(vec, dtype=np.complex128))


def conjugate_sandwich(conj_mat: OperatorMatrix, mat: OperatorMatrix) -> np.ndarray:
    """Matrix of C T C for antilinear C(x) = M conj(x): equals M conj(T) M."""
    m = conj_mat.entries
    return m @ np.conj(mat.entries) @ m
