"""Polariton normal modes and the analytic two-mode wavefunctions.

Quadratures follow ``x = (a + a^+)/sqrt(2)``, ``p = (a - a^+)/(sqrt(2) i)``
(vacuum variance 1/2), mode 1 is the cavity and mode 2 the matter excitation.
In quadrature space the polariton annihilation operators read::

    sqrt(2) A_- = -cos(t/2) (mu x1 + d1/mu) + sin(t/2) (x2/nu + nu d2)
    sqrt(2) A_+ =  sin(t/2) (nu x1 + d1/nu) + cos(t/2) (x2/mu + mu d2)

with ``mu = sqrt(omega_-/omega_c)``, ``nu = sqrt(omega_+/omega_c)`` and
``t`` the mixing angle.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "TransformCoefficients",
    "GroundStateGaussian",
    "symplectic_form",
    "build_transform",
    "ground_state",
    "wavefunction_00",
    "wavefunction_10",
    "wavefunction_01",
    "annihilation_residuals",
    "virtual_photon_number",
]


def symplectic_form(modes=2):
    """Block-diagonal symplectic form for ordering (x1, p1, x2, p2, ...)."""
    return np.kron(np.eye(modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class TransformCoefficients:
    """Canonical transformation to polariton quadratures.

    ``matrix`` maps ``(x1, p1, x2, p2)`` to ``(X_-, P_-, X_+, P_+)`` where
    ``A_pm = (X_pm + i P_pm)/sqrt(2)``.
    """

    mu: float
    nu: float
    theta: float
    matrix: np.ndarray

    def symplectic_residual(self):
        J = symplectic_form()
        T = self.matrix
        return float(np.max(np.abs(T @ J @ T.T - J)))


@dataclass(frozen=True)
class GroundStateGaussian:
    """Coefficients of ``exp(-(a x1^2 + b x2^2 + 2 c x1 x2)/2) / sqrt(pi)``."""

    a: float
    b: float
    c: float
    r: float
    e_ground: float

    @property
    def precision_matrix(self):
        return np.array([[self.a, self.c], [self.c, self.b]])


def _mu_nu(spectrum):
    mu = np.sqrt(spectrum.omega_minus / spectrum.omega_c)
    nu = np.sqrt(spectrum.omega_plus / spectrum.omega_c)
    return float(mu), float(nu)


def build_transform(params, spectrum):
    """Assemble :class:`TransformCoefficients` from a polariton spectrum.

    In the uncoupled limit the mixing angle is 0 or pi and the matrix reduces
    to a (signed) permutation of the bare quadratures.
    """
    mu, nu = _mu_nu(spectrum)
    cs = np.cos(0.5 * spectrum.theta)
    sn = np.sin(0.5 * spectrum.theta)
    T = np.array(
        [
            [-cs * mu, 0.0, sn / nu, 0.0],
            [0.0, -cs / mu, 0.0, sn * nu],
            [sn * nu, 0.0, cs / mu, 0.0],
            [0.0, sn / nu, 0.0, cs * mu],
        ]
    )
    return TransformCoefficients(mu, nu, spectrum.theta, T)


def ground_state(params, spectrum):
    """Gaussian ground-state coefficients of the polariton vacuum.

    ``c`` is taken from ``2 Omega / (omega_- + omega_+)``, which needs no
    cancellation; ``r = asinh(c)``.
    """
    mu, nu = _mu_nu(spectrum)
    cs2 = np.cos(0.5 * spectrum.theta) ** 2
    sn2 = np.sin(0.5 * spectrum.theta) ** 2
    a = mu**2 * cs2 + nu**2 * sn2
    b = cs2 / mu**2 + sn2 / nu**2
    c = 2.0 * spectrum.Omega / (spectrum.omega_minus + spectrum.omega_plus)
    return GroundStateGaussian(
        float(a), float(b), float(c), float(np.arcsinh(c)), spectrum.ground_energy
    )


def wavefunction_00(gs, x1, x2):
    """Ground-state amplitude at quadrature point(s) ``(x1, x2)``."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    q = gs.a * x1 * x1 + gs.b * x2 * x2 + 2.0 * gs.c * x1 * x2
    return np.exp(-0.5 * q) / np.sqrt(np.pi)


def wavefunction_10(gs, transform, x1, x2):
    """One lower-polariton excitation, ``A_-^+ Psi_00``."""
    cs = np.cos(0.5 * transform.theta)
    sn = np.sin(0.5 * transform.theta)
    pref = -transform.mu * cs * np.asarray(x1) + sn / transform.nu * np.asarray(x2)
    return np.sqrt(2.0) * pref * wavefunction_00(gs, x1, x2)


def wavefunction_01(gs, transform, x1, x2):
    """One upper-polariton excitation, ``A_+^+ Psi_00``."""
    cs = np.cos(0.5 * transform.theta)
    sn = np.sin(0.5 * transform.theta)
    pref = transform.nu * sn * np.asarray(x1) + cs / transform.mu * np.asarray(x2)
    return np.sqrt(2.0) * pref * wavefunction_00(gs, x1, x2)


def annihilation_residuals(gs, transform, x1, x2):
    """``(sqrt(2) A_- Psi_00, sqrt(2) A_+ Psi_00)`` at the given points.

    Derivatives of the Gaussian are taken analytically; both outputs vanish
    identically when ``(a, b, c)`` solve the ground-state conditions.
    """
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    psi = wavefunction_00(gs, x1, x2)
    d1 = -(gs.a * x1 + gs.c * x2) * psi
    d2 = -(gs.b * x2 + gs.c * x1) * psi
    mu, nu = transform.mu, transform.nu
    cs = np.cos(0.5 * transform.theta)
    sn = np.sin(0.5 * transform.theta)
    res_minus = -cs * (mu * x1 * psi + d1 / mu) + sn * (x2 * psi / nu + nu * d2)
    res_plus = sn * (nu * x1 * psi + d1 / nu) + cs * (x2 * psi / mu + mu * d2)
    return res_minus, res_plus


def virtual_photon_number(gs):
    """Ground-state cavity occupation ``<a^+ a> = (a + b)/4 - 1/2``."""
    # clamp rounding noise just below zero in the uncoupled limit
    return max(0.25 * (gs.a + gs.b) - 0.5, 0.0)
