"""System parameters and the two-mode polariton spectrum.

The Hamiltonian (hbar = 1, energies in meV) couples a cavity mode ``a`` of
energy ``omega_c`` to a matter excitation ``b`` of energy ``omega_0``::

    H = omega_c (1/2 + a^+ a) + omega_0 (1/2 + b^+ b)
        + Omega (a^+ + a)(b^+ + b) + G (a^+ + a)^2

with vacuum Rabi energy ``Omega`` and diamagnetic coefficient ``G``.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InstabilityError, ParameterError

__all__ = [
    "Phonon",
    "Exciton",
    "Plasmon",
    "SystemParams",
    "PolaritonSpectrum",
    "resolve_coupling",
    "mixing_angle",
    "polariton_spectrum",
    "dielectric_dispersion_check",
]


@dataclass(frozen=True)
class Phonon:
    """Phonon polaritons: ``Omega = g * sqrt(omega_0 / omega_c)``."""

    g: float
    eps_inf: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.g) or self.g < 0:
            raise ParameterError(f"coupling strength g must be >= 0, got {self.g}")
        if not self.eps_inf >= 1:
            raise ParameterError(f"eps_inf must be >= 1, got {self.eps_inf}")


@dataclass(frozen=True)
class Exciton:
    """Exciton polaritons at normal incidence, no spatial dispersion.

    ``chi`` is the dimensionless photon-exciton coupling constant and
    ``eps_inf`` the background dielectric constant.
    """

    chi: float
    eps_inf: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.chi) or self.chi < 0:
            raise ParameterError(f"chi must be >= 0, got {self.chi}")
        if not self.eps_inf >= 1:
            raise ParameterError(f"eps_inf must be >= 1, got {self.eps_inf}")

    @classmethod
    def from_g(cls, g, omega_0, eps_inf=1.0):
        """Exciton variant whose effective coupling strength equals ``g``."""
        return cls(chi=eps_inf * (g / omega_0) ** 2 / np.pi, eps_inf=eps_inf)


@dataclass(frozen=True)
class Plasmon:
    """Plasmon polaritons: Rabi energy independent of the cavity, ``Omega = g``."""

    g: float

    def __post_init__(self):
        if not np.isfinite(self.g) or self.g < 0:
            raise ParameterError(f"coupling strength g must be >= 0, got {self.g}")


@dataclass(frozen=True)
class SystemParams:
    """Bare energies (meV), coupling variant and optional diamagnetic override."""

    omega_c: float
    omega_0: float
    variant: object
    g_override_diamagnetic: Optional[float] = None

    def __post_init__(self):
        for name in ("omega_c", "omega_0"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ParameterError(f"{name} must be a positive energy, got {value}")
        if not isinstance(self.variant, (Phonon, Exciton, Plasmon)):
            raise ParameterError(f"unknown coupling variant {self.variant!r}")
        if self.g_override_diamagnetic is not None and self.g_override_diamagnetic < 0:
            raise ParameterError("diamagnetic coefficient G must be >= 0")

    @classmethod
    def phonon(cls, omega_c, omega_0, g, **kwargs):
        return cls(omega_c, omega_0, Phonon(g), **kwargs)

    @property
    def eps_inf(self):
        return getattr(self.variant, "eps_inf", 1.0)


@dataclass(frozen=True)
class PolaritonSpectrum:
    """Upper/lower polariton energies, mixing angle, Rabi energy and ``G``.

    ``g`` is the effective coupling strength after variant resolution.
    """

    omega_plus: float
    omega_minus: float
    theta: float
    Omega: float
    G: float
    omega_c: float
    omega_0: float
    g: float

    @property
    def splitting(self):
        return self.omega_plus - self.omega_minus

    @property
    def ground_energy(self):
        """Zero-point energy of the polariton vacuum, ``(omega_- + omega_+)/2``."""
        return 0.5 * (self.omega_plus + self.omega_minus)

    @property
    def degenerate(self):
        return self.Omega == 0.0


def resolve_coupling(params):
    """Return ``(Omega, G, g_effective)`` for the parameter set's variant.

    ``G`` defaults to ``Omega**2 / omega_0`` (single-transition diamagnetic
    term); ``params.g_override_diamagnetic`` replaces it when given. For the
    plasmon variant the same default is applied.
    """
    wc, w0, var = params.omega_c, params.omega_0, params.variant
    if isinstance(var, Phonon):
        g = var.g
        Omega = g * np.sqrt(w0 / wc)
    elif isinstance(var, Exciton):
        g = w0 * np.sqrt(np.pi * var.chi / var.eps_inf)
        Omega = w0 * np.sqrt(np.pi * var.chi * w0 / (wc * var.eps_inf))
    else:
        g = var.g
        Omega = g
    if params.g_override_diamagnetic is None:
        G = Omega**2 / w0
    else:
        G = float(params.g_override_diamagnetic)
    return float(Omega), float(G), float(g)


def mixing_angle(omega_c, omega_0, Omega, G):
    """Mixing angle theta in [0, pi].

    Equal to ``arctan(num/den) + pi/2`` with ``num = omega_c (4G + omega_c) -
    omega_0**2`` and ``den = 4 Omega sqrt(omega_c omega_0) >= 0``. Evaluated as
    ``atan2(den, -num)``, which for ``den > 0`` is the same branch folded into
    (0, pi) without dividing by ``den``. For ``den == 0`` this gives ``pi``
    when the cavity sits above the matter mode and ``0`` below it; exact
    degeneracy (``num == den == 0``) returns ``pi/2`` by convention.
    """
    num = omega_c * (4.0 * G + omega_c) - omega_0**2
    den = 4.0 * Omega * np.sqrt(omega_c * omega_0)
    if num == 0.0 and den == 0.0:
        return np.pi / 2
    return float(np.arctan2(den, -num))


def polariton_spectrum(params):
    """Diagonalize the two-mode Hamiltonian.

    Returns a :class:`PolaritonSpectrum`; raises :class:`InstabilityError`
    when the lower branch has ``omega_-**2 <= 0``.
    """
    Omega, G, g = resolve_coupling(params)
    wc, w0 = params.omega_c, params.omega_0
    theta = mixing_angle(wc, w0, Omega, G)

    if Omega == 0.0:
        # uncoupled oscillators; the cavity branch still carries G
        w_cav = np.sqrt(wc * (wc + 4.0 * G))
        wp, wm = max(w_cav, w0), min(w_cav, w0)
        return PolaritonSpectrum(wp, wm, theta, Omega, G, wc, w0, g)

    coupling = 2.0 * Omega * np.sqrt(wc * w0)
    half = 0.5 * theta
    wp2 = w0**2 + coupling * np.tan(half)
    wm2 = w0**2 - coupling / np.tan(half)
    if not wm2 > 0:
        raise InstabilityError(
            f"lower polariton frequency squared is {wm2:.6g} meV^2 <= 0 "
            f"(omega_c={wc}, omega_0={w0}, Omega={Omega:.6g}, G={G:.6g})"
        )
    return PolaritonSpectrum(
        float(np.sqrt(wp2)), float(np.sqrt(wm2)), theta, Omega, G, wc, w0, g
    )


def dispersion_polynomial(omega, omega_c, omega_0, coupling_sq):
    """``(w^2 - omega_c^2)(w^2 - omega_0^2) - coupling_sq * w^2``.

    ``coupling_sq`` is ``4 g**2`` for phonon polaritons (``4 G omega_c`` in
    general). Its positive roots are the polariton energies.
    """
    w2 = omega * omega
    return (w2 - omega_c**2) * (w2 - omega_0**2) - coupling_sq * w2


def dielectric_dispersion_check(params, spectrum, pole_rtol=1e-8):
    """Relative residual of both branches in the bulk dielectric dispersion law.

    For each branch the quantity ``|eps(w) w^2 - eps_inf omega_c^2| /
    (eps_inf omega_c^2)`` is formed with ``eps(w) = eps_inf + 4 eps_inf g^2 /
    (omega_0^2 - w^2)``. Close to the pole ``w = omega_0`` the residual is
    taken from the polynomial form instead, normalized by ``omega_c^2
    omega_0^2``. Returns the larger of the two branch residuals.
    """
    wc, w0 = params.omega_c, params.omega_0
    eps_inf = params.eps_inf
    coupling_sq = 4.0 * spectrum.G * wc
    out = 0.0
    for w in (spectrum.omega_plus, spectrum.omega_minus):
        gap = w0**2 - w * w
        if abs(gap) <= pole_rtol * w0**2:
            res = abs(dispersion_polynomial(w, wc, w0, coupling_sq)) / (wc**2 * w0**2)
        else:
            eps = eps_inf + eps_inf * coupling_sq / gap
            res = abs(eps * w * w - eps_inf * wc**2) / (eps_inf * wc**2)
        out = max(out, res)
    return float(out)
