import numpy as np
import pytest

from dttokit import (
    BlaschkeProduct,
    BlaschkeQuotient,
    LaurentPoly,
    compressed_shift,
    conjugation_action,
    conjugated,
    constant_symbol,
    corner_gram,
    dual_toeplitz_matrix,
    dual_truncated_toeplitz,
    hankel_matrix,
    inner_symbol,
    matrix_to_csv,
    matrix_to_json,
    shift_symbol,
    tm_basis,
    toeplitz_matrix,
    truncated_toeplitz,
    window_inner_product,
)
from dttokit.fourier import delta_window, window_shift, window_sub
from dttokit.operators import OperatorMatrix, apply_conjugation, conjugate_sandwich
from dttokit.oracle import oracle_rank_one_spectrum

from conftest import random_blaschke, random_quotient

Z = shift_symbol(1)
ZBAR = conjugated(Z)


# ---------------------------------------------------------------------------
# monomial blocks


def test_toeplitz_identity_and_shift():
    assert np.array_equal(toeplitz_matrix(constant_symbol(1.0), 4, 4).entries, np.eye(4))
    assert np.array_equal(toeplitz_matrix(Z, 4, 4).entries, np.eye(4, k=-1))


def test_toeplitz_deep_coanalytic_restriction_vanishes():
    t = toeplitz_matrix(LaurentPoly(-3, [1.0]), 2, 2)
    assert np.abs(t.entries).max() == 0.0


def test_toeplitz_adjoint_symmetry(rng):
    phi = random_quotient(rng, max_degree=3, z_power_range=(-2, 2))
    t = toeplitz_matrix(phi, 6, 6, 1e-12)
    tbar = toeplitz_matrix(conjugated(phi), 6, 6, 1e-12)
    assert np.abs(tbar.entries - t.entries.conj().T).max() < 1e-12


def test_hankel_analytic_symbol_vanishes():
    assert np.abs(hankel_matrix(Z, 4, 4).entries).max() == 0.0


def test_hankel_conjugate_shift_columns():
    h = hankel_matrix(ZBAR, 3, 2)
    # input 1 -> zbar, input z -> 0
    assert h.entries[0, 0] == 1.0
    assert np.abs(h.entries[1:, 0]).max() == 0.0
    assert np.abs(h.entries[:, 1]).max() == 0.0


def test_hankel_quotient_column_norm():
    alpha = 0.5
    h = hankel_matrix(conjugated(BlaschkeQuotient(1.0, -1, (alpha,))), 50, 2, tol=1e-13)
    s0_sq = float(np.sum(np.abs(h.entries[:, 0]) ** 2))
    assert abs(s0_sq - alpha**2 * (1 - alpha**2)) < 1e-12
    # second column is alpha times the first
    assert np.abs(h.entries[:, 1] - alpha * h.entries[:, 0]).max() < 1e-13


def test_dual_toeplitz_identity_and_shift():
    assert np.array_equal(dual_toeplitz_matrix(constant_symbol(1.0), 4).entries, np.eye(4))
    q = dual_toeplitz_matrix(Z, 5)
    assert np.array_equal(q.entries, np.eye(5, k=1))
    # kernel is spanned by the first coordinate (zbar)
    assert np.abs(q.entries[:, 0]).max() == 0.0
    qbar = dual_toeplitz_matrix(ZBAR, 5)
    assert np.array_equal(qbar.entries, q.entries.conj().T)


# ---------------------------------------------------------------------------
# truncated Toeplitz and the compressed shift


def test_truncated_toeplitz_monomial_case():
    basis = tm_basis(BlaschkeProduct(1.0, (0.0, 0.0)))
    a = truncated_toeplitz(basis, Z)
    assert np.array_equal(a.entries, [[0.0, 0.0], [1.0, 0.0]])


def test_truncated_toeplitz_dim_one_entry_modulus():
    lam = 0.5
    basis = tm_basis(BlaschkeProduct(1.0, (lam,)))
    a = truncated_toeplitz(basis, Z)
    assert abs(abs(a.entries[0, 0]) - lam) < 1e-12


def test_truncated_toeplitz_vanishes_on_own_symbol(rng):
    u = random_blaschke(rng, max_degree=4, max_modulus=0.8)
    a = truncated_toeplitz(tm_basis(u), inner_symbol(u))
    assert np.abs(a.entries).max() < 1e-11


def test_compressed_shift_is_truncated_toeplitz_with_shift_symbol(rng):
    u = random_blaschke(rng, max_degree=4, max_modulus=0.8)
    basis = tm_basis(u)
    assert np.abs(compressed_shift(basis).entries - truncated_toeplitz(basis, Z).entries).max() < 1e-13


def test_compressed_shift_defect_identity(rng):
    # I - A* A equals the rank-one projector onto S* u
    for degree in (1, 2, 4):
        u = random_blaschke(rng, max_modulus=0.8, degree=degree)
        basis = tm_basis(u)
        a = compressed_shift(basis)
        defect = np.eye(degree) - a.adjoint().entries @ a.entries
        uw = u.window(1e-13)
        s_star_u = window_shift(window_sub(uw, delta_window(0, u.at_zero())), -1)
        x = np.array([window_inner_product(s_star_u, e) for e in basis.basis])
        assert np.abs(defect - np.outer(x, np.conj(x))).max() < 1e-10
        assert abs(np.vdot(x, x).real - (1 - abs(u.at_zero()) ** 2)) < 1e-10


def test_compressed_shift_defect_spectrum_degree_two():
    u = BlaschkeProduct(1.0, (0.3, 0.6))
    a = compressed_shift(tm_basis(u))
    eig = np.sort(np.linalg.eigvalsh(a.adjoint().entries @ a.entries))
    expected = sorted(
        v.real for v in oracle_rank_one_spectrum(1.0, -1.0, 1.0 - abs(u.at_zero()) ** 2)
    )
    assert np.abs(eig - expected).max() < 1e-10


def test_rank_one_spectrum_from_constructed_defect(rng):
    # eigenvalues of alpha I + beta x (x)* match the two-point formula
    d = 5
    x = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    alpha, beta = 0.7, -0.3
    t = alpha * np.eye(d) + beta * np.outer(x, np.conj(x))
    eig = np.linalg.eigvals(t)
    targets = oracle_rank_one_spectrum(alpha, beta, float(np.vdot(x, x).real))
    for ev in eig:
        assert min(abs(ev - t0) for t0 in targets) < 1e-10


# ---------------------------------------------------------------------------
# corner Gram


def test_corner_gram_constant_symbol_vanishes(rng):
    u = random_blaschke(rng, max_degree=3, max_modulus=0.8)
    g = corner_gram(tm_basis(u), constant_symbol(np.exp(0.3j)))
    assert np.abs(g.entries).max() < 1e-11


def test_corner_gram_unimodular_defect_identity(rng):
    for _ in range(5):
        u = random_blaschke(rng, max_degree=4, max_modulus=0.8)
        phi = random_quotient(rng, max_degree=3, z_power_range=(-2, 2))
        basis = tm_basis(u)
        g = corner_gram(basis, phi)
        a = truncated_toeplitz(basis, phi)
        resid = np.abs(g.entries + a.adjoint().entries @ a.entries - np.eye(u.degree)).max()
        assert resid < 1e-9


def test_corner_gram_columnwise_isometry(rng):
    # |A_phi e_k|^2 + G_kk = 1 for unimodular phi
    u = random_blaschke(rng, max_degree=4, max_modulus=0.8)
    phi = random_quotient(rng, max_degree=2, z_power_range=(-1, 1))
    basis = tm_basis(u)
    g = corner_gram(basis, phi)
    a = truncated_toeplitz(basis, phi)
    for k in range(u.degree):
        col = a.entries[:, k]
        assert abs(np.vdot(col, col).real + g.entries[k, k].real - 1.0) < 1e-8


def test_corner_gram_shift_on_monomial_space():
    basis = tm_basis(BlaschkeProduct(1.0, (0.0, 0.0)))
    g = corner_gram(basis, ZBAR)
    assert np.abs(g.entries - np.diag([1.0, 0.0])).max() < 1e-14


# ---------------------------------------------------------------------------
# dual truncated Toeplitz block


def test_dtto_block_identity_symbol():
    u = BlaschkeProduct(1.0, (0.5,))
    d = dual_truncated_toeplitz(u, constant_symbol(1.0), 5)
    assert np.abs(d.entries - np.eye(10)).max() < 1e-14


def test_dtto_block_offdiagonal_rank_one():
    n = 16
    u = BlaschkeProduct(1.0, (0.5,))
    d = dual_truncated_toeplitz(u, Z, n)
    ur = d.entries[:n, n:]
    expected = np.zeros((n, n), dtype=complex)
    expected[0, 0] = np.conj(u.at_zero())
    assert np.abs(ur - expected).max() < 1e-12
    # lower-left block vanishes for the shift symbol
    assert np.abs(d.entries[n:, :n]).max() < 1e-12


def test_dtto_block_offdiagonal_vanishes_at_origin_zero():
    n = 16
    d = dual_truncated_toeplitz(BlaschkeProduct(1.0, (0.0, 0.0)), Z, n)
    assert np.abs(d.entries[:n, n:]).max() == 0.0


def test_dtto_defect_identity_interior(rng):
    # D* D = I - (1 - |u(0)|^2) zbar (x) zbar away from the truncation edge
    n = 32
    for u in (
        BlaschkeProduct(1.0, (0.0, 0.0)),
        BlaschkeProduct(1.0, (0.5,)),
        random_blaschke(rng, max_degree=3, max_modulus=0.8),
    ):
        d = dual_truncated_toeplitz(u, Z, n)
        lhs = d.adjoint().entries @ d.entries
        rhs = np.eye(2 * n, dtype=complex)
        rhs[n, n] -= 1.0 - abs(u.at_zero()) ** 2
        interior = [j for j in range(2 * n) if j != n - 1 and j != 2 * n - 1]
        resid = np.abs((lhs - rhs)[np.ix_(interior, interior)]).max()
        assert resid < 1e-9


# ---------------------------------------------------------------------------
# conjugation


def test_conjugation_is_basis_swap():
    c = conjugation_action(BlaschkeProduct(1.0, (0.0, 0.0)), 4)
    v = np.zeros(8)
    v[4] = 1.0  # zbar coordinate
    image = apply_conjugation(c, v)
    assert image[0] == 1.0 and np.abs(image[1:]).max() == 0.0


def test_conjugation_unitary_and_involutive(rng):
    c = conjugation_action(random_blaschke(rng, max_degree=3, max_modulus=0.8), 8)
    m = c.entries
    assert np.abs(m @ m.conj().T - np.eye(16)).max() == 0.0
    assert np.abs(m @ np.conj(m) - np.eye(16)).max() == 0.0
    for _ in range(100):
        x = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        assert np.abs(apply_conjugation(c, apply_conjugation(c, x)) - x).max() < 1e-15


def test_conjugation_intertwines_block_with_adjoint(rng):
    n = 16
    for _ in range(3):
        u = random_blaschke(rng, max_degree=3, max_modulus=0.8)
        phi = random_quotient(rng, max_degree=2, z_power_range=(-1, 1))
        d = dual_truncated_toeplitz(u, phi, n, tol=1e-12)
        c = conjugation_action(u, n)
        resid = np.abs(conjugate_sandwich(c, d) - d.entries.conj().T).max()
        assert resid < 1e-10


# ---------------------------------------------------------------------------
# exports


def test_matrix_csv_round_trip():
    m = OperatorMatrix(np.array([[1 + 2j, 0.5], [0, -1j]]), "in", "out", 1e-12)
    text = matrix_to_csv(m)
    import csv
    import io

    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 2 and len(rows[0]) == 2
    re, im = map(float, rows[0][0].split(","))
    assert re == 1.0 and im == 2.0


def test_matrix_json_envelope():
    m = OperatorMatrix(np.eye(2), "in", "out", 3e-9)
    env = matrix_to_json(m)
    assert env["rows"] == 2 and env["cols"] == 2
    assert env["entry_error"] == 3e-9
    assert env["entries"][0][0] == [1.0, 0.0]
    assert env["in_basis"] == "in"


def test_operator_matrix_invariants():
    with pytest.raises(ValueError):
        OperatorMatrix(np.zeros((0, 2)), "a", "b")
    with pytest.raises(ValueError):
        OperatorMatrix(np.eye(2), "a", "b", entry_error=-1.0)
    m = OperatorMatrix(np.eye(3), "a", "b", 1e-10)
    assert abs(m.sv_perturbation() - 3e-10) < 1e-24
