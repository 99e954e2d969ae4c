import numpy as np
import pytest

from dttokit import BlaschkeProduct, BlaschkeQuotient


def random_blaschke(rng, max_degree=6, max_modulus=0.9, degree=None) -> BlaschkeProduct:
    d = int(degree) if degree is not None else int(rng.integers(1, max_degree + 1))
    r = rng.uniform(0.0, max_modulus, d)
    th = rng.uniform(0.0, 2.0 * np.pi, d)
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return BlaschkeProduct(phase, tuple(r * np.exp(1j * th)))


def random_quotient(rng, max_degree=3, max_modulus=0.8, z_power_range=(0, 2)) -> BlaschkeQuotient:
    d = int(rng.integers(0, max_degree + 1))
    r = rng.uniform(0.0, max_modulus, d)
    th = rng.uniform(0.0, 2.0 * np.pi, d)
    zp = int(rng.integers(z_power_range[0], z_power_range[1] + 1))
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return BlaschkeQuotient(phase, zp, tuple(r * np.exp(1j * th)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
