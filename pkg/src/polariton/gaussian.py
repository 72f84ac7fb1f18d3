"""Two-mode Gaussian covariance machinery for the polariton ground state.

Covariance ordering is ``(x1, p1, x2, p2)`` and
``V_ij = <{xi_i, xi_j}>/2``; the vacuum has ``V = I/2``.
"""

from dataclasses import dataclass

import numpy as np

from .bogoliubov import symplectic_form
from .errors import ParameterError

__all__ = [
    "CovarianceMatrix",
    "SingleModeWigner",
    "covariance_from_ground_state",
    "two_mode_squeezed_covariance",
    "reduced_wigner",
    "symplectic_invariants",
    "ppt_symplectic_eigenvalues",
    "ppt_symplectic_eigenvalue",
]


@dataclass(frozen=True)
class CovarianceMatrix:
    V: np.ndarray

    def __post_init__(self):
        V = np.asarray(self.V, dtype=float)
        if V.shape != (4, 4):
            raise ParameterError(f"covariance must be 4x4, got {V.shape}")
        if not np.allclose(V, V.T, rtol=0, atol=1e-12 * max(1.0, np.abs(V).max())):
            raise ParameterError("covariance matrix is not symmetric")
        try:
            np.linalg.cholesky(V)
        except np.linalg.LinAlgError as exc:
            raise ParameterError(f"covariance matrix is not positive definite: {exc}")
        object.__setattr__(self, "V", V)

    @property
    def A(self):
        return self.V[:2, :2]

    @property
    def B(self):
        return self.V[2:, 2:]

    @property
    def C(self):
        return self.V[:2, 2:]

    def symplectic_spectrum(self):
        """Williamson symplectic eigenvalues (both >= 1/2 for a physical state)."""
        ev = np.linalg.eigvals(1j * symplectic_form() @ self.V)
        return np.sort(np.abs(ev.real))[::2]


@dataclass(frozen=True)
class SingleModeWigner:
    """Zero-mean single-mode Gaussian: alpha = <p^2>, beta = <x^2>, gamma = <xp+px>/2."""

    alpha: float
    beta: float
    gamma: float

    @property
    def determinant(self):
        return self.alpha * self.beta - self.gamma**2

    @property
    def sigma(self):
        """Thermal-like occupation ``sqrt(alpha beta - gamma^2) - 1/2``."""
        return float(np.sqrt(self.determinant) - 0.5)

    def __call__(self, x, p):
        x = np.asarray(x, dtype=float)
        p = np.asarray(p, dtype=float)
        d = self.determinant
        q = (self.alpha * x * x + self.beta * p * p - 2.0 * self.gamma * x * p) / d
        return np.exp(-0.5 * q) / (2.0 * np.pi * np.sqrt(d))


def covariance_from_ground_state(gs):
    """Covariance matrix of the Gaussian ground state.

    Position covariances are the inverse of the wavefunction's precision
    matrix ``[[a, c], [c, b]]`` (halved), momentum covariances the precision
    matrix itself (halved); ``ab - c^2 = 1`` makes these the block pattern
    ``A = diag(b, a)/2``, ``B = diag(a, b)/2``, ``C = diag(-c, c)/2``.
    """
    a, b, c = gs.a, gs.b, gs.c
    V = 0.5 * np.array(
        [
            [b, 0.0, -c, 0.0],
            [0.0, a, 0.0, c],
            [-c, 0.0, a, 0.0],
            [0.0, c, 0.0, b],
        ]
    )
    return CovarianceMatrix(V)


def two_mode_squeezed_covariance(r):
    """Two-mode squeezed vacuum with ``det A = cosh(r)^2/4``, ``det C = -sinh(r)^2/4``.

    Same convention as the ground state's ``c = sinh r``: the partial-transpose
    eigenvalue is ``exp(-r)/2``.
    """
    ch, sh = np.cosh(r), np.sinh(r)
    V = 0.5 * np.array(
        [
            [ch, 0.0, sh, 0.0],
            [0.0, ch, 0.0, -sh],
            [sh, 0.0, ch, 0.0],
            [0.0, -sh, 0.0, ch],
        ]
    )
    return CovarianceMatrix(V)


def reduced_wigner(mode, cov):
    """Single-mode reduced Gaussian of ``mode`` (1 or 2)."""
    if mode == 1:
        block = cov.A
    elif mode == 2:
        block = cov.B
    else:
        raise ParameterError(f"mode must be 1 or 2, got {mode}")
    return SingleModeWigner(
        alpha=float(block[1, 1]), beta=float(block[0, 0]), gamma=float(block[0, 1])
    )


def _det2(m):
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def symplectic_invariants(cov):
    """Return ``(det A, det B, det C, det V, delta_tilde)``.

    ``delta_tilde = det A + det B - 2 det C`` is the partial-transpose
    counterpart of ``det A + det B + 2 det C`` (which is 1/2 for pure states).
    """
    dA, dB, dC = _det2(cov.A), _det2(cov.B), _det2(cov.C)
    dV = float(np.linalg.det(cov.V))
    return dA, dB, dC, dV, dA + dB - 2.0 * dC


def ppt_symplectic_eigenvalues(cov):
    """Both symplectic eigenvalues ``(nu_minus, nu_plus)`` of the partial transpose.

    ``nu_pm^2 = (delta_tilde +- sqrt(delta_tilde^2 - 4 det V)) / 2``. The
    smaller root is formed as ``det V / nu_plus^2`` to avoid cancellation. A
    slightly negative discriminant (rounding) is clamped to zero.
    """
    _, _, _, dV, delta = symplectic_invariants(cov)
    disc = delta * delta - 4.0 * dV
    if disc < 0:
        if disc < -1e-10 * delta * delta:
            raise ParameterError(
                f"negative discriminant {disc:.3e} in partial-transpose spectrum"
            )
        disc = 0.0
    nu_plus_sq = 0.5 * (delta + np.sqrt(disc))
    nu_minus_sq = dV / nu_plus_sq
    return float(np.sqrt(nu_minus_sq)), float(np.sqrt(nu_plus_sq))


def ppt_symplectic_eigenvalue(cov):
    """Smallest partial-transpose symplectic eigenvalue; entangled iff < 1/2."""
    return ppt_symplectic_eigenvalues(cov)[0]
