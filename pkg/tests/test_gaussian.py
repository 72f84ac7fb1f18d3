import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polariton.bogoliubov import ground_state, wavefunction_00
from polariton.errors import ParameterError
from polariton.gaussian import (
    CovarianceMatrix,
    covariance_from_ground_state,
    ppt_symplectic_eigenvalue,
    ppt_symplectic_eigenvalues,
    reduced_wigner,
    symplectic_invariants,
    two_mode_squeezed_covariance,
)
from polariton.hopfield import polariton_spectrum

from conftest import gauss_legendre_2d, phonon


def cov_for(rc, rg):
    params = phonon(rc, rg)
    gs = ground_state(params, polariton_spectrum(params))
    return gs, covariance_from_ground_state(gs)


def test_vacuum_covariance():
    _, cov = cov_for(1.0, 0.0)
    np.testing.assert_array_equal(cov.V, 0.5 * np.eye(4))
    assert symplectic_invariants(cov) == (0.25, 0.25, 0.0, 0.0625, 0.5)
    assert ppt_symplectic_eigenvalue(cov) == 0.5


def test_invariants_at_half_coupling():
    _, cov = cov_for(1.0, 0.5)
    dA, dB, dC, dV, delta = symplectic_invariants(cov)
    # c^2 = 1/5
    assert dA == pytest.approx(0.3, abs=1e-14)
    assert dB == pytest.approx(0.3, abs=1e-14)
    assert dC == pytest.approx(-0.05, abs=1e-14)
    assert dV == pytest.approx(1 / 16, abs=1e-14)
    assert delta == pytest.approx(0.7, abs=1e-14)


def test_det_v_off_resonance():
    _, cov = cov_for(2.0, 0.8)
    assert np.linalg.det(cov.V) == pytest.approx(1 / 16, abs=1e-12)


def test_covariance_from_wavefunction_quadrature():
    # second moments of |Psi_00|^2 and of the momentum-space Gaussian by quadrature
    gs, cov = cov_for(0.6, 0.9)
    # soft precision eigenvalue ~0.3 here, so widen the box
    X1, X2, W = gauss_legendre_2d(n=160, half_width=12)
    prob = wavefunction_00(gs, X1, X2) ** 2
    assert np.sum(W * X1 * X1 * prob) == pytest.approx(cov.V[0, 0], abs=1e-10)
    assert np.sum(W * X2 * X2 * prob) == pytest.approx(cov.V[2, 2], abs=1e-10)
    assert np.sum(W * X1 * X2 * prob) == pytest.approx(cov.V[0, 2], abs=1e-10)
    # <p_i p_j> = int (d_i psi)(d_j psi), d psi = -(P x) psi for real psi
    g1 = gs.a * X1 + gs.c * X2
    g2 = gs.c * X1 + gs.b * X2
    assert np.sum(W * g1 * g1 * prob) == pytest.approx(cov.V[1, 1], abs=1e-10)
    assert np.sum(W * g2 * g2 * prob) == pytest.approx(cov.V[3, 3], abs=1e-10)
    assert np.sum(W * g1 * g2 * prob) == pytest.approx(cov.V[1, 3], abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(0.01, 1.0))
def test_purity_identities(rc, rg):
    gs, cov = cov_for(rc, rg)
    dA, dB, dC, dV, delta = symplectic_invariants(cov)
    assert dV == pytest.approx(1 / 16, abs=1e-12)
    assert dA + dB + 2 * dC == pytest.approx(0.5, abs=1e-12)
    assert delta == pytest.approx(0.5 + gs.c**2, abs=1e-12)
    nu_m, nu_p = ppt_symplectic_eigenvalues(cov)
    assert nu_m * nu_p == pytest.approx(np.sqrt(dV), abs=1e-10)
    assert nu_m == pytest.approx(0.5 * np.exp(-np.arcsinh(gs.c)), abs=1e-12)
    assert nu_m == pytest.approx(0.5 * (np.sqrt(gs.c**2 + 1) - gs.c), abs=1e-12)
    assert np.all(cov.symplectic_spectrum() >= 0.5 - 1e-12)


def test_ppt_eigenvalue_half_coupling():
    _, cov = cov_for(1.0, 0.5)
    expected = 0.5 * (np.sqrt(1.2) - np.sqrt(0.2))
    assert ppt_symplectic_eigenvalue(cov) == pytest.approx(expected, rel=1e-13)
    assert ppt_symplectic_eigenvalue(cov) == pytest.approx(0.32412, abs=1e-5)


def test_two_mode_squeezed():
    cov = two_mode_squeezed_covariance(1.0)
    assert ppt_symplectic_eigenvalue(cov) == pytest.approx(0.5 * np.exp(-1.0), rel=1e-13)
    assert ppt_symplectic_eigenvalue(cov) == pytest.approx(0.18394, abs=1e-5)


def test_ppt_eigenvalue_independent_route():
    # symplectic eigenvalues of the partially transposed covariance from the
    # spectrum of i J V~, with p2 -> -p2
    _, cov = cov_for(1.8, 0.65)
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    Vt = flip @ cov.V @ flip
    J = np.kron(np.eye(2), [[0, 1], [-1, 0]])
    nus = np.sort(np.abs(np.linalg.eigvals(1j * J @ Vt).real))
    nu_m, nu_p = ppt_symplectic_eigenvalues(cov)
    assert nus[0] == pytest.approx(nu_m, rel=1e-12)
    assert nus[-1] == pytest.approx(nu_p, rel=1e-12)


def test_reduced_wigner_half_coupling():
    gs, cov = cov_for(1.0, 0.5)
    w = reduced_wigner(1, cov)
    assert w.alpha == pytest.approx(gs.a / 2, rel=1e-15)
    assert w.beta == pytest.approx(gs.b / 2, rel=1e-15)
    assert w.alpha == pytest.approx(0.67082, abs=1e-5)
    assert w.beta == pytest.approx(0.44721, abs=1e-5)
    assert w.gamma == 0.0
    w2 = reduced_wigner(2, cov)
    assert (w2.alpha, w2.beta) == (w.beta, w.alpha)
    assert w2.sigma == pytest.approx(w.sigma, abs=1e-15)


def test_vacuum_wigner_peak():
    _, cov = cov_for(1.0, 0.0)
    assert reduced_wigner(1, cov)(0.0, 0.0) == pytest.approx(1 / np.pi, rel=1e-15)


@pytest.mark.parametrize("mode", [1, 2])
def test_wigner_normalized(mode):
    _, cov = cov_for(0.5, 0.8)
    X, P, W = gauss_legendre_2d()
    assert np.sum(W * reduced_wigner(mode, cov)(X, P)) == pytest.approx(1.0, abs=1e-8)


def test_wigner_with_correlation_term_normalized():
    from polariton.gaussian import SingleModeWigner

    w = SingleModeWigner(alpha=0.9, beta=0.6, gamma=0.3)
    assert w.determinant >= 0.25
    X, P, W = gauss_legendre_2d()
    assert np.sum(W * w(X, P)) == pytest.approx(1.0, abs=1e-8)
    assert np.sum(W * X * X * w(X, P)) == pytest.approx(w.beta, abs=1e-8)
    assert np.sum(W * P * P * w(X, P)) == pytest.approx(w.alpha, abs=1e-8)
    assert np.sum(W * X * P * w(X, P)) == pytest.approx(w.gamma, abs=1e-8)


def test_bad_mode():
    _, cov = cov_for(1.0, 0.5)
    with pytest.raises(ParameterError):
        reduced_wigner(3, cov)


def test_rejects_non_positive_definite():
    with pytest.raises(ParameterError):
        CovarianceMatrix(np.diag([0.5, 0.5, 0.5, -0.1]))
    with pytest.raises(ParameterError):
        CovarianceMatrix(np.eye(3))
