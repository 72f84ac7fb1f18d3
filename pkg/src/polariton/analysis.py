"""One-call composition of spectrum, ground state and entanglement measures."""

from dataclasses import dataclass

from .bogoliubov import (
    GroundStateGaussian,
    TransformCoefficients,
    build_transform,
    ground_state,
)
from .entanglement import EntanglementReport, entanglement_report
from .gaussian import CovarianceMatrix, covariance_from_ground_state
from .hopfield import PolaritonSpectrum, SystemParams, polariton_spectrum

__all__ = ["Analysis", "analyze"]


@dataclass(frozen=True)
class Analysis:
    params: SystemParams
    spectrum: PolaritonSpectrum
    transform: TransformCoefficients
    ground: GroundStateGaussian
    covariance: CovarianceMatrix
    report: EntanglementReport

    def spectrum_record(self):
        s = self.spectrum
        return {
            "omega_c_meV": s.omega_c,
            "omega_0_meV": s.omega_0,
            "g_meV": s.g,
            "Omega_meV": s.Omega,
            "G_meV": s.G,
            "omega_plus_meV": s.omega_plus,
            "omega_minus_meV": s.omega_minus,
            "theta": s.theta,
        }

    def ground_record(self):
        rec = self.spectrum_record()
        gs = self.ground
        rec.update(
            mu=self.transform.mu,
            nu=self.transform.nu,
            a=gs.a,
            b=gs.b,
            c=gs.c,
            r=gs.r,
            e_ground_meV=gs.e_ground,
            n_virtual=self.report.n_virtual,
        )
        return rec

    def entangle_record(self):
        rec = self.ground_record()
        rep = self.report
        rec.update(
            sigma=rep.sigma,
            entropy_over_kB=rep.entropy_over_kB,
            nu_tilde_minus=rep.nu_tilde_minus,
            log_negativity=rep.log_negativity,
        )
        return rec


def analyze(params):
    """Run the full analytic chain for one parameter set."""
    spectrum = polariton_spectrum(params)
    transform = build_transform(params, spectrum)
    gs = ground_state(params, spectrum)
    cov = covariance_from_ground_state(gs)
    return Analysis(params, spectrum, transform, gs, cov, entanglement_report(gs, cov))
