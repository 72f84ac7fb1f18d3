import numpy as np
import pytest

from polariton.hopfield import SystemParams
from polariton import oracle

OMEGA_0 = 169.1  # hBN TO phonon, meV
PHI = (1 + np.sqrt(5)) / 2


def phonon(omega_c_ratio, g_ratio, omega_0=OMEGA_0):
    return SystemParams.phonon(omega_c_ratio * omega_0, omega_0, g_ratio * omega_0)


@pytest.fixture
def resonant_half():
    return phonon(1.0, 0.5)


@pytest.fixture
def resonant_fifth():
    return phonon(1.0, 0.2)


@pytest.fixture(scope="session")
def fock_states():
    """Cached oracle ground states, keyed by (omega_c/omega_0, g/omega_0, n_max)."""
    cache = {}

    def get(wc_ratio, g_ratio, n_max=30):
        key = (wc_ratio, g_ratio, n_max)
        if key not in cache:
            trunc = oracle.FockTruncation(n_max)
            H = oracle.build_hamiltonian(phonon(wc_ratio, g_ratio), trunc)
            cache[key] = (oracle.ground_state_numeric(H, trunc), trunc)
        return cache[key]

    return get


def quartic_roots(omega_c, omega_0, g):
    """Positive roots of w^4 - w^2 (wc^2 + w0^2 + 4 g^2) + w0^2 wc^2 = 0, via numpy.roots."""
    s = np.sort(np.roots([1.0, -(omega_c**2 + omega_0**2 + 4 * g**2), omega_0**2 * omega_c**2]).real)
    return np.sqrt(s[1]), np.sqrt(s[0])


def gauss_legendre_2d(n=128, half_width=8.0):
    """Tensor-product Gauss-Legendre nodes/weights on [-L, L]^2."""
    x, w = np.polynomial.legendre.leggauss(n)
    x = x * half_width
    w = w * half_width
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    W = np.outer(w, w)
    return X1, X2, W


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
