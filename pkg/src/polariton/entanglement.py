"""Entanglement entropy and logarithmic negativity of the ground state.

Entropies are reported as ``S / k_B`` in natural-log units; the logarithmic
negativity uses base 2.
"""

from dataclasses import dataclass

import numpy as np

from .bogoliubov import virtual_photon_number
from .errors import ParameterError
from .gaussian import ppt_symplectic_eigenvalue, reduced_wigner

__all__ = [
    "EntanglementReport",
    "sigma_from_c",
    "entropy_from_sigma",
    "entropy_from_c",
    "log_negativity_from_nu",
    "log_negativity_from_c",
    "entanglement_report",
]

_SMALL_SIGMA = 1e-6


@dataclass(frozen=True)
class EntanglementReport:
    sigma: float
    entropy_over_kB: float
    r: float
    nu_tilde_minus: float
    log_negativity: float
    n_virtual: float


def sigma_from_c(c):
    """``(sqrt(1 + c^2) - 1)/2`` without the small-``c`` cancellation."""
    c = float(c)
    return float(c * c / (2.0 * (np.sqrt(1.0 + c * c) + 1.0)))


def entropy_from_sigma(sigma):
    """Von Neumann entropy ``(s+1) ln(s+1) - s ln s`` of a thermal-like mode.

    Below ``sigma = 1e-6`` the series ``s (1 - ln s) + s^2/2`` is used;
    ``sigma = 0`` returns exactly 0.
    """
    sigma = float(sigma)
    if not sigma >= 0:
        raise ParameterError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0.0:
        return 0.0
    if sigma < _SMALL_SIGMA:
        return sigma * (1.0 - np.log(sigma)) + 0.5 * sigma * sigma
    return float((sigma + 1.0) * np.log1p(sigma) - sigma * np.log(sigma))


def entropy_from_c(c):
    """Closed form ``sqrt(c^2+1) ln((sqrt(c^2+1)+1)/c) + ln(c/2)``.

    A difference of two diverging logarithms for small ``c``; prefer
    ``entropy_from_sigma(sigma_from_c(c))`` below ``c ~ 1e-4``.
    """
    c = float(c)
    if c == 0.0:
        return 0.0
    s = np.sqrt(c * c + 1.0)
    return float(s * np.log((s + 1.0) / c) + np.log(c / 2.0))


def log_negativity_from_nu(nu_tilde_minus):
    """``max(0, -log2(2 nu))``."""
    return max(0.0, float(-np.log2(2.0 * nu_tilde_minus)))


def log_negativity_from_c(c):
    """Ground-state negativity via ``nu = (sqrt(c^2+1) - c)/2``."""
    c = float(c)
    nu = 0.5 / (np.sqrt(c * c + 1.0) + c)
    return log_negativity_from_nu(nu)


def entanglement_report(gs, cov):
    """Assemble both entanglement measures from the ground-state Gaussian.

    ``sigma`` is computed from ``c`` and cross-checked against the reduced
    Wigner triples of both modes, which must agree (equal subsystem
    entropies of a pure bipartite state).
    """
    sigma = sigma_from_c(gs.c)
    s1 = reduced_wigner(1, cov).sigma
    s2 = reduced_wigner(2, cov).sigma
    tol = 1e-10 * max(1.0, sigma)
    if abs(s1 - sigma) > tol or abs(s2 - sigma) > tol:
        raise ParameterError(
            f"reduced-mode sigmas disagree: from c {sigma!r}, mode 1 {s1!r}, mode 2 {s2!r}"
        )
    nu = ppt_symplectic_eigenvalue(cov)
    return EntanglementReport(
        sigma=sigma,
        entropy_over_kB=entropy_from_sigma(sigma),
        r=gs.r,
        nu_tilde_minus=nu,
        log_negativity=log_negativity_from_nu(nu),
        n_virtual=virtual_photon_number(gs),
    )
