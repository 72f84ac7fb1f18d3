import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polariton.bogoliubov import (
    annihilation_residuals,
    build_transform,
    ground_state,
    symplectic_form,
    virtual_photon_number,
    wavefunction_00,
    wavefunction_01,
    wavefunction_10,
)
from polariton.hopfield import SystemParams, polariton_spectrum

from conftest import OMEGA_0, PHI, gauss_legendre_2d, phonon


def solve(params):
    s = polariton_spectrum(params)
    return s, build_transform(params, s), ground_state(params, s)


def test_transform_mu_nu_at_half_coupling():
    _, t, _ = solve(phonon(1.0, 0.5))
    assert t.mu == pytest.approx(np.sqrt(1 / PHI), rel=1e-14)
    assert t.nu == pytest.approx(np.sqrt(PHI), rel=1e-14)
    assert t.mu == pytest.approx(0.78615, abs=1e-5)
    assert t.nu == pytest.approx(1.27202, abs=1e-5)


def test_transform_symplectic_off_resonance():
    _, t, _ = solve(phonon(2.0, 0.7))
    assert t.symplectic_residual() < 1e-12


def test_transform_commutators_from_ladder_form():
    # rows of T give A = (X + iP)/sqrt(2); [A_i, A_j^+] = delta_ij and [A_i, A_j] = 0
    _, t, _ = solve(phonon(0.6, 0.8))
    T = t.matrix
    J = symplectic_form()
    # for linear forms u.xi, v.xi: [u.xi, v.xi] = i u^T J v
    ladder = [(T[0] + 1j * T[1]) / np.sqrt(2), (T[2] + 1j * T[3]) / np.sqrt(2)]
    for i, u in enumerate(ladder):
        for j, v in enumerate(ladder):
            comm_dag = 1j * u @ J @ np.conj(v)
            comm = 1j * u @ J @ v
            assert comm_dag == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)
            assert comm == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("wc", [100.0, 250.0])
def test_transform_uncoupled_is_signed_permutation(wc):
    _, t, gs = solve(SystemParams.phonon(wc, OMEGA_0, 0.0))
    T = np.abs(t.matrix)
    assert np.array_equal(np.sort(T.ravel())[-4:], np.ones(4))
    assert np.count_nonzero(T > 1e-15) == 4
    assert (gs.a, gs.b, gs.c) == (1.0, 1.0, 0.0)


def test_ground_state_half_coupling():
    _, _, gs = solve(phonon(1.0, 0.5))
    # at resonance c = g / sqrt(omega_0^2 + g^2) = 1/sqrt(5); a = 3/sqrt(5), b = 2/sqrt(5)
    assert gs.c == pytest.approx(1 / np.sqrt(5), rel=1e-14)
    assert gs.a == pytest.approx(3 / np.sqrt(5), rel=1e-13)
    assert gs.b == pytest.approx(2 / np.sqrt(5), rel=1e-13)
    assert gs.r == pytest.approx(np.log((1 + np.sqrt(6)) / np.sqrt(5)), rel=1e-14)
    assert gs.a * gs.b == pytest.approx(1 + gs.c**2, abs=1e-12)
    assert gs.e_ground == pytest.approx(np.sqrt(5) / 2 * OMEGA_0, rel=1e-14)


def test_ground_state_fifth_coupling():
    _, _, gs = solve(phonon(1.0, 0.2))
    assert gs.c == pytest.approx(0.4 / np.sqrt(4 + 4 * 0.04), rel=1e-14)
    assert gs.c == pytest.approx(0.19612, abs=1e-5)


def test_ground_state_both_forms_of_c():
    params = phonon(2.0, 0.7)
    s, _, gs = solve(params)
    alt = (s.omega_plus - s.omega_minus) / (2 * np.sqrt(params.omega_c * params.omega_0)) * np.sin(s.theta)
    assert gs.c == pytest.approx(alt, rel=1e-10)


def test_ground_state_matches_normal_mode_precision_matrix():
    # independent route: H = p^T D p / 2 + x^T K x / 2, ground-state precision
    # matrix P = D^{-1/2} (D^{1/2} K D^{1/2})^{1/2} D^{-1/2}
    params = phonon(0.7, 0.6)
    _, _, gs = solve(params)
    wc, w0 = params.omega_c, params.omega_0
    Omega = 0.6 * OMEGA_0 * np.sqrt(w0 / wc)
    G = Omega**2 / w0
    D = np.diag([wc, w0])
    K = np.array([[wc + 4 * G, 2 * Omega], [2 * Omega, w0]])
    Dh = np.sqrt(D)
    evals, evecs = np.linalg.eigh(Dh @ K @ Dh)
    root = evecs @ np.diag(np.sqrt(evals)) @ evecs.T
    P = np.linalg.inv(Dh) @ root @ np.linalg.inv(Dh)
    np.testing.assert_allclose(gs.precision_matrix, P, rtol=1e-12, atol=1e-13)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(0.01, 1.0))
def test_purity_and_positivity(rc, rg):
    params = phonon(rc, rg)
    s, _, gs = solve(params)
    assert gs.a > 0 and gs.b > 0 and gs.c >= 0
    assert gs.a * gs.b - gs.c**2 == pytest.approx(1.0, abs=1e-12)
    assert gs.e_ground > (params.omega_c + params.omega_0) / 2


@settings(max_examples=50, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(0.01, 1.0), st.integers(0, 2**32 - 1))
def test_annihilation_conditions_hold(rc, rg, seed):
    params = phonon(rc, rg)
    _, t, gs = solve(params)
    x1, x2 = np.random.default_rng(seed).uniform(-2.5, 2.5, size=(2, 25))
    res_m, res_p = annihilation_residuals(gs, t, x1, x2)
    assert np.max(np.abs(res_m)) < 1e-9
    assert np.max(np.abs(res_p)) < 1e-9


def test_annihilation_conditions_finite_difference():
    # independent of the analytic gradient: central differences on Psi_00
    params = phonon(1.3, 0.45)
    _, t, gs = solve(params)
    h = 1e-5
    rng = np.random.default_rng(7)
    x1, x2 = rng.uniform(-2, 2, size=(2, 25))
    psi = wavefunction_00(gs, x1, x2)
    d1 = (wavefunction_00(gs, x1 + h, x2) - wavefunction_00(gs, x1 - h, x2)) / (2 * h)
    d2 = (wavefunction_00(gs, x1, x2 + h) - wavefunction_00(gs, x1, x2 - h)) / (2 * h)
    cs, sn = np.cos(t.theta / 2), np.sin(t.theta / 2)
    res_m = -cs * (t.mu * x1 * psi + d1 / t.mu) + sn * (x2 * psi / t.nu + t.nu * d2)
    res_p = sn * (t.nu * x1 * psi + d1 / t.nu) + cs * (x2 * psi / t.mu + t.mu * d2)
    assert np.max(np.abs(res_m)) < 1e-9
    assert np.max(np.abs(res_p)) < 1e-9


def test_wavefunction_at_origin():
    _, _, gs = solve(phonon(1.7, 0.3))
    assert wavefunction_00(gs, 0.0, 0.0) == pytest.approx(1 / np.sqrt(np.pi), rel=1e-15)
    assert wavefunction_00(gs, 0.0, 0.0) == pytest.approx(0.5641896, abs=1e-7)


def test_wavefunction_sample_point():
    _, _, gs = solve(phonon(1.0, 0.5))
    expected = np.exp(-0.5 * 3 / np.sqrt(5)) / np.sqrt(np.pi)
    assert wavefunction_00(gs, 1.0, 0.0) == pytest.approx(expected, rel=1e-14)


def test_excited_states_vanish_at_origin():
    _, t, gs = solve(phonon(0.8, 0.4))
    assert wavefunction_10(gs, t, 0.0, 0.0) == 0.0
    assert wavefunction_01(gs, t, 0.0, 0.0) == 0.0


@pytest.mark.parametrize("rc, rg", [(1.0, 0.5), (2.0, 0.7), (0.5, 0.3)])
def test_wavefunctions_orthonormal_by_quadrature(rc, rg):
    _, t, gs = solve(phonon(rc, rg))
    X1, X2, W = gauss_legendre_2d()
    psi = {
        "00": wavefunction_00(gs, X1, X2),
        "10": wavefunction_10(gs, t, X1, X2),
        "01": wavefunction_01(gs, t, X1, X2),
    }
    for k, f in psi.items():
        assert np.sum(W * f * f) == pytest.approx(1.0, abs=1e-8), k
    assert abs(np.sum(W * psi["10"] * psi["01"])) < 1e-8
    assert abs(np.sum(W * psi["00"] * psi["10"])) < 1e-8
    assert abs(np.sum(W * psi["00"] * psi["01"])) < 1e-8


def test_virtual_photon_number_values():
    _, _, gs = solve(phonon(1.0, 0.5))
    assert virtual_photon_number(gs) == pytest.approx(np.sqrt(5) / 4 - 0.5, rel=1e-13)
    assert virtual_photon_number(gs) == pytest.approx(0.05902, abs=1e-5)
    _, _, gs0 = solve(phonon(1.0, 0.0))
    assert virtual_photon_number(gs0) == 0.0
    _, _, gs2 = solve(phonon(1.0, 0.2))
    assert 0 < virtual_photon_number(gs2) < virtual_photon_number(gs)


def test_virtual_photon_number_by_quadrature():
    # <a^+ a> = (<x1^2> + <p1^2> - 1)/2 with <p1^2> = int |d1 psi|^2
    _, _, gs = solve(phonon(1.6, 0.55))
    X1, X2, W = gauss_legendre_2d()
    psi = wavefunction_00(gs, X1, X2)
    x_sq = np.sum(W * X1**2 * psi**2)
    p_sq = np.sum(W * ((gs.a * X1 + gs.c * X2) * psi) ** 2)
    assert virtual_photon_number(gs) == pytest.approx((x_sq + p_sq - 1) / 2, abs=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(0.01, 0.99), st.floats(0.001, 0.5))
def test_c_increases_with_g(rc, rg, step):
    _, _, lo = solve(phonon(rc, rg))
    _, _, hi = solve(phonon(rc, rg + step))
    assert hi.c > lo.c


def test_c_vanishes_with_g():
    cs = [solve(phonon(1.2, rg))[2].c for rg in (1e-2, 1e-4, 1e-6, 1e-8)]
    assert cs == sorted(cs, reverse=True)
    assert cs[-1] < 1e-7


@pytest.mark.parametrize("g_ratio", [0.2, 0.5, 1.0])
def test_c_decreases_with_cavity_energy(g_ratio):
    wc = np.linspace(100, 300, 201)
    c = [ground_state(p, polariton_spectrum(p)).c for p in (SystemParams.phonon(w, OMEGA_0, g_ratio * OMEGA_0) for w in wc)]
    assert np.all(np.diff(c) < 0)
