"""Polariton ultrastrong coupling: spectrum, Gaussian ground state and its entanglement."""

from .analysis import Analysis, analyze
from .bogoliubov import (
    GroundStateGaussian,
    TransformCoefficients,
    build_transform,
    ground_state,
    virtual_photon_number,
    wavefunction_00,
    wavefunction_01,
    wavefunction_10,
)
from .entanglement import (
    EntanglementReport,
    entanglement_report,
    entropy_from_c,
    entropy_from_sigma,
    log_negativity_from_c,
)
from .errors import (
    ConfigurationError,
    ConvergenceError,
    CSVParseError,
    InconsistentMeasurementError,
    InstabilityError,
    ParameterError,
    PolaritonError,
)
from .fit import MeasuredDoublet, evaluate_doublet, fit_from_csv, invert_spectrum
from .gaussian import (
    CovarianceMatrix,
    covariance_from_ground_state,
    ppt_symplectic_eigenvalue,
    reduced_wigner,
    symplectic_invariants,
)
from .hopfield import (
    Exciton,
    Phonon,
    Plasmon,
    PolaritonSpectrum,
    SystemParams,
    dielectric_dispersion_check,
    polariton_spectrum,
    resolve_coupling,
)

__version__ = "0.1.0"
