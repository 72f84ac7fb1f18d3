"""Recover coupling and entanglement from a measured polariton doublet.

The two measured energies fix the two unknowns exactly:
``omega_c = omega_+ omega_- / omega_0`` and
``4 G omega_c = (omega_+ + omega_-)^2 - (omega_c + omega_0)^2``; with the
default diamagnetic coefficient ``G = Omega^2 / omega_0`` this gives the Rabi
energy, and the variant's Rabi-energy model gives ``g``.
"""

import csv
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bogoliubov import ground_state, virtual_photon_number
from .entanglement import entropy_from_sigma, log_negativity_from_c, sigma_from_c
from .errors import CSVParseError, InconsistentMeasurementError, ParameterError
from .hopfield import Phonon, Plasmon, SystemParams, polariton_spectrum

__all__ = [
    "MeasuredDoublet",
    "Inversion",
    "invert_spectrum",
    "evaluate_doublet",
    "read_doublet_records",
    "fit_from_csv",
    "write_fit_csv",
    "OUTPUT_COLUMNS",
    "UNCERTAINTY_COLUMNS",
]

VARIANTS = ("phonon", "exciton", "plasmon")

OUTPUT_COLUMNS = (
    "omega_plus_meV",
    "omega_minus_meV",
    "omega_c_meV",
    "g_meV",
    "Omega_meV",
    "c",
    "sigma",
    "entropy_over_kB",
    "log_negativity",
    "nu_tilde_minus",
    "n_virtual",
    "status",
)
UNCERTAINTY_COLUMNS = ("g_err_meV", "log_negativity_err")


@dataclass(frozen=True)
class MeasuredDoublet:
    omega_plus_meas: float
    omega_minus_meas: float
    omega_0: float
    variant: str = "phonon"
    sigma_plus: Optional[float] = None
    sigma_minus: Optional[float] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ParameterError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if not self.omega_0 > 0:
            raise ParameterError(f"omega_0 must be positive, got {self.omega_0}")
        if not self.omega_minus_meas > 0:
            raise ParameterError(f"omega_minus must be positive, got {self.omega_minus_meas}")
        if not self.omega_plus_meas > self.omega_minus_meas:
            raise ParameterError(
                f"need omega_plus > omega_minus, got {self.omega_plus_meas} <= "
                f"{self.omega_minus_meas}"
            )


@dataclass(frozen=True)
class Inversion:
    omega_c: float
    g: float
    Omega: float
    c: float


def invert_spectrum(m):
    """Closed-form ``(omega_c, g, Omega, c)`` for a measured doublet.

    ``g`` follows the variant: the phonon/exciton coupling strength
    ``Omega sqrt(omega_c / omega_0)`` (the exciton ``chi`` is then
    ``eps_inf (g/omega_0)^2 / pi``), or ``Omega`` itself for plasmons. ``c``
    does not depend on the variant.
    """
    wp, wm, w0 = m.omega_plus_meas, m.omega_minus_meas, m.omega_0
    wc = wp * wm / w0
    total = wp + wm
    # (wp + wm)^2 - (wc + w0)^2, using wp + wm - wc - w0 = (wp - w0)(w0 - wm)/w0;
    # real coupling needs omega_0 inside [omega_-, omega_+]
    excess = (wp - w0) * (w0 - wm) / w0 * (total + wc + w0)
    if excess < 0:
        raise InconsistentMeasurementError(
            f"(omega_+ + omega_-)^2 < (omega_c + omega_0)^2 by {-excess:.6g} meV^2; "
            "no real coupling reproduces this doublet",
            residual=-excess,
        )
    g_phonon = 0.5 * math.sqrt(excess)
    Omega = g_phonon * math.sqrt(w0 / wc)
    g = Omega if m.variant == "plasmon" else g_phonon
    c = 2.0 * Omega / total
    return Inversion(wc, g, Omega, c)


def _report(inv):
    sigma = sigma_from_c(inv.c)
    nu = 0.5 / (math.sqrt(1.0 + inv.c**2) + inv.c)
    return {
        "sigma": sigma,
        "entropy_over_kB": entropy_from_sigma(sigma),
        "log_negativity": log_negativity_from_c(inv.c),
        "nu_tilde_minus": nu,
    }


def _n_virtual(m, inv):
    # needs a and b separately, so go through the forward model
    variant = Plasmon(inv.g) if m.variant == "plasmon" else Phonon(inv.g)
    params = SystemParams(inv.omega_c, m.omega_0, variant)
    spec = polariton_spectrum(params)
    return virtual_photon_number(ground_state(params, spec))


def _evaluate(m):
    inv = invert_spectrum(m)
    row = {
        "omega_plus_meV": m.omega_plus_meas,
        "omega_minus_meV": m.omega_minus_meas,
        "omega_c_meV": inv.omega_c,
        "g_meV": inv.g,
        "Omega_meV": inv.Omega,
        "c": inv.c,
    }
    row.update(_report(inv))
    row["n_virtual"] = _n_virtual(m, inv)
    row["status"] = "ok"
    return row


def _propagate(m, rel_step=1e-6):
    """Linearized uncertainties of ``g`` and ``E_N`` by central differences."""

    def quantities(wp, wm):
        inv = invert_spectrum(MeasuredDoublet(wp, wm, m.omega_0, m.variant))
        return np.array([inv.g, log_negativity_from_c(inv.c)])

    wp, wm = m.omega_plus_meas, m.omega_minus_meas
    var = np.zeros(2)
    for k, (value, sig) in enumerate(((wp, m.sigma_plus), (wm, m.sigma_minus))):
        if not sig:
            continue
        h = rel_step * value
        lo = [wp, wm]
        hi = [wp, wm]
        lo[k] -= h
        hi[k] += h
        deriv = (quantities(*hi) - quantities(*lo)) / (2 * h)
        var += (deriv * sig) ** 2
    return np.sqrt(var)


def evaluate_doublet(m):
    """Inversion plus entanglement measures for one doublet, as an output row."""
    try:
        row = _evaluate(m)
    except ParameterError as exc:
        row = _error_row(exc, m.omega_plus_meas, m.omega_minus_meas)
    if m.sigma_plus is not None or m.sigma_minus is not None:
        g_err = en_err = math.nan
        if row["status"] == "ok":
            g_err, en_err = _propagate(m)
        row["g_err_meV"] = float(g_err)
        row["log_negativity_err"] = float(en_err)
    return row


def _error_row(exc, wp, wm):
    if isinstance(exc, InconsistentMeasurementError):
        status = "error:inconsistent"
    else:
        status = "error:invalid"
    row = {k: math.nan for k in OUTPUT_COLUMNS}
    row["omega_plus_meV"] = wp
    row["omega_minus_meV"] = wm
    row["status"] = status
    return row


def _parse_float(text, name, line):
    try:
        return float(text)
    except (TypeError, ValueError):
        raise CSVParseError(f"column {name!r}: cannot parse {text!r} as a number", line)


def read_doublet_records(path):
    """Parse a doublet CSV into ``(omega_plus, omega_minus, sigma_plus, sigma_minus)``.

    The header must contain ``omega_plus_meV`` and ``omega_minus_meV``;
    ``sigma_plus_meV`` and ``sigma_minus_meV`` are optional. Blank lines are
    skipped. Raises :class:`CSVParseError` with the offending line number.
    """
    records = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = None
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if header is None:
                header = [cell.strip() for cell in row]
                missing = {"omega_plus_meV", "omega_minus_meV"} - set(header)
                if missing:
                    raise CSVParseError(f"missing column(s) {sorted(missing)}", line)
                continue
            if len(row) != len(header):
                raise CSVParseError(f"expected {len(header)} fields, found {len(row)}", line)
            rec = dict(zip(header, (cell.strip() for cell in row)))
            values = [_parse_float(rec[k], k, line) for k in ("omega_plus_meV", "omega_minus_meV")]
            for k in ("sigma_plus_meV", "sigma_minus_meV"):
                text = rec.get(k, "")
                values.append(_parse_float(text, k, line) if text else None)
            records.append(tuple(values))
    return records


def fit_from_csv(path, omega_0, variant="phonon"):
    """Invert every doublet of a CSV file; returns a list of row dicts.

    Rows that fail validation or inversion are kept with an ``error:*``
    status rather than dropped.
    """
    if variant not in VARIANTS:
        raise ParameterError(f"variant must be one of {VARIANTS}, got {variant!r}")
    rows = []
    for wp, wm, sp, sm in read_doublet_records(path):
        try:
            m = MeasuredDoublet(wp, wm, omega_0, variant, sp, sm)
        except ParameterError as exc:
            row = _error_row(exc, wp, wm)
            if sp is not None or sm is not None:
                row["g_err_meV"] = row["log_negativity_err"] = math.nan
            rows.append(row)
            continue
        rows.append(evaluate_doublet(m))
    return rows


def format_value(value):
    """Fixed 12-significant-digit scientific notation; strings pass through."""
    if isinstance(value, str):
        return value
    if value is None:
        return ""
    # + 0.0 folds negative zero into zero
    return f"{float(value) + 0.0:.11e}"


def write_fit_csv(rows, fh):
    """Write fit rows with the fixed column order (uncertainties appended if present)."""
    columns = list(OUTPUT_COLUMNS)
    if any("g_err_meV" in r for r in rows):
        columns += list(UNCERTAINTY_COLUMNS)
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([format_value(r.get(col, math.nan)) for col in columns])
