"""Command-line front end.

Subcommands: ``spectrum``, ``ground``, ``entangle``, ``sweep``, ``verify``,
``fit``. Energies are in meV. Exit codes:

====  =====================================================
0     success
2     invalid parameters, configuration or input file
3     unstable parameter set (omega_-^2 <= 0)
4     output path not writable
5     ``verify``: analytic and oracle disagree beyond tolerance
6     ``verify``: eigensolver did not converge
7     ``fit``: at least one row has an error status
====  =====================================================
"""

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .analysis import analyze
from .errors import (
    ConfigurationError,
    ConvergenceError,
    CSVParseError,
    InstabilityError,
    ParameterError,
)
from .fit import fit_from_csv, format_value, write_fit_csv
from .hopfield import Exciton, Phonon, Plasmon, SystemParams
from . import oracle

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_INSTABILITY = 3
EXIT_UNWRITABLE = 4
EXIT_VERIFY_FAILED = 5
EXIT_NO_CONVERGENCE = 6
EXIT_FIT_ROW_ERROR = 7

CONFIG_ENV = "POLARITON_CONFIG"

SWEEP_COLUMNS = (
    "omega_c_meV",
    "g_meV",
    "omega_plus_meV",
    "omega_minus_meV",
    "c",
    "entropy_over_kB",
    "log_negativity",
)
MAX_SWEEP_POINTS = 100_000

# analytic-vs-oracle tolerances: (kind, value); kind "rel" or "abs"
VERIFY_TOLERANCES = {
    "ground_energy_meV": ("rel", 1e-6),
    "n_virtual": ("abs", 1e-4),
    "covariance": ("abs", 1e-5),
    "entropy_over_kB": ("abs", 1e-4),
    "log_negativity": ("abs", 1e-3),
}


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------- parsing


def _common(parser):
    parser.add_argument("--omega-c", type=float, help="bare cavity energy (meV)")
    parser.add_argument("--omega-0", type=float, help="matter excitation energy (meV)")
    parser.add_argument("--g", type=float, help="coupling strength (meV)")
    parser.add_argument(
        "--variant", choices=("phonon", "exciton", "plasmon"), default="phonon"
    )
    parser.add_argument("--chi", type=float, help="exciton coupling constant")
    parser.add_argument("--eps-inf", type=float, default=1.0)
    parser.add_argument(
        "--g-diamagnetic", type=float, help="override diamagnetic coefficient G (meV)"
    )
    parser.add_argument(
        "--format", choices=("table", "csv", "json-lines"), default="table"
    )
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--config", help="flat JSON object of flag values")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polariton",
        description="Ground-state entanglement of ultrastrongly coupled polaritons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    parser.subcommands = {}

    for name, help_text in (
        ("spectrum", "polariton energies and mixing angle"),
        ("ground", "Gaussian ground-state coefficients"),
        ("entangle", "entanglement entropy and logarithmic negativity"),
    ):
        parser.subcommands[name] = sub.add_parser(name, help=help_text)
        _common(parser.subcommands[name])

    p = parser.subcommands["sweep"] = sub.add_parser(
        "sweep", help="CSV curves versus omega_c or g"
    )
    _common(p)
    p.add_argument("--axis", choices=("omega_c", "g"), default="omega_c")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--g-list", help="comma-separated g values (meV) for omega_c sweeps")

    p = parser.subcommands["verify"] = sub.add_parser(
        "verify", help="compare analytic results with the Fock oracle"
    )
    _common(p)
    p.add_argument("--n-max", type=int, default=30)

    p = parser.subcommands["fit"] = sub.add_parser(
        "fit", help="invert measured doublets from a CSV file"
    )
    _common(p)
    p.add_argument("csv_path")
    return parser


def _load_config(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read config {path}: {exc}", EXIT_PARAMETER)
    if not isinstance(data, dict):
        raise CLIError(f"config {path} must hold a flat JSON object", EXIT_PARAMETER)
    return {str(k).lstrip("-").replace("-", "_"): v for k, v in data.items()}


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    config_path = args.config or os.environ.get(CONFIG_ENV)
    if config_path:
        config = _load_config(config_path)
        # flags given on the command line win over the config file
        sub_parser = parser.subcommands[args.command]
        known = set(vars(args)) - {"command", "config"}
        unknown = set(config) - known
        if unknown:
            raise CLIError(f"unknown config key(s): {sorted(unknown)}", EXIT_PARAMETER)
        sub_parser.set_defaults(**config)
        args = parser.parse_args(argv)
    return args


def _params_from_args(args, g=None, omega_c=None):
    omega_c = args.omega_c if omega_c is None else omega_c
    g = args.g if g is None else g
    if args.omega_0 is None:
        raise CLIError("--omega-0 is required", EXIT_PARAMETER)
    if omega_c is None:
        raise CLIError("--omega-c is required", EXIT_PARAMETER)
    if args.variant == "exciton":
        if args.chi is not None:
            variant = Exciton(args.chi, args.eps_inf)
        elif g is not None:
            variant = Exciton.from_g(g, args.omega_0, args.eps_inf)
        else:
            raise CLIError("exciton variant needs --chi or --g", EXIT_PARAMETER)
    else:
        if g is None:
            raise CLIError("--g is required", EXIT_PARAMETER)
        variant = Plasmon(g) if args.variant == "plasmon" else Phonon(g, args.eps_inf)
    return SystemParams(omega_c, args.omega_0, variant, args.g_diamagnetic)


# --------------------------------------------------------------------- output


def _render(records, columns, fmt):
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([format_value(rec[c]) for c in columns])
    elif fmt == "json-lines":
        for rec in records:
            out = {}
            for c in columns:
                v = rec[c]
                out[c] = v if isinstance(v, str) else float(format_value(v))
            buf.write(json.dumps(out) + "\n")
    else:
        width = max(len(c) for c in columns)
        for i, rec in enumerate(records):
            if i:
                buf.write("\n")
            for c in columns:
                v = rec[c]
                text = v if isinstance(v, str) else f"{float(v):.10g}"
                buf.write(f"{c:<{width}}  {text}\n")
    return buf.getvalue()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(f"cannot write {out}: {exc}", EXIT_UNWRITABLE)


# --------------------------------------------------------------------- commands


def cmd_point(args):
    result = analyze(_params_from_args(args))
    rec = {
        "spectrum": result.spectrum_record,
        "ground": result.ground_record,
        "entangle": result.entangle_record,
    }[args.command]()
    _emit(_render([rec], list(rec), args.format), args.out)
    return EXIT_OK


def sweep_records(args):
    if args.start is None or args.stop is None:
        raise CLIError("sweep needs --start and --stop", EXIT_PARAMETER)
    if not args.start < args.stop:
        raise CLIError("sweep needs --start < --stop", EXIT_PARAMETER)
    if not 2 <= args.points <= MAX_SWEEP_POINTS:
        raise CLIError(f"--points must be in [2, {MAX_SWEEP_POINTS}]", EXIT_PARAMETER)
    axis = np.linspace(args.start, args.stop, args.points)

    if args.axis == "omega_c":
        if args.g_list:
            try:
                g_values = [float(v) for v in args.g_list.split(",") if v.strip()]
            except ValueError:
                raise CLIError(f"bad --g-list {args.g_list!r}", EXIT_PARAMETER)
        elif args.g is not None or args.variant == "exciton":
            g_values = [args.g]
        else:
            raise CLIError("omega_c sweep needs --g or --g-list", EXIT_PARAMETER)
        points = [(float(wc), g) for wc in axis for g in g_values]
    else:
        if args.omega_c is None:
            raise CLIError("g sweep needs --omega-c", EXIT_PARAMETER)
        points = [(args.omega_c, float(g)) for g in axis]

    records = []
    for wc, g in points:
        result = analyze(_params_from_args(args, g=g, omega_c=wc))
        records.append(
            {
                "omega_c_meV": result.spectrum.omega_c,
                "g_meV": result.spectrum.g,
                "omega_plus_meV": result.spectrum.omega_plus,
                "omega_minus_meV": result.spectrum.omega_minus,
                "c": result.ground.c,
                "entropy_over_kB": result.report.entropy_over_kB,
                "log_negativity": result.report.log_negativity,
            }
        )
    return records


def cmd_sweep(args):
    records = sweep_records(args)
    fmt = "csv" if args.format == "table" else args.format
    _emit(_render(records, SWEEP_COLUMNS, fmt), args.out)
    return EXIT_OK


def verification_rows(params, n_max):
    """Analytic vs. oracle comparison rows with per-row pass flags."""
    result = analyze(params)
    trunc = oracle.FockTruncation(n_max)
    state = oracle.ground_state_numeric(oracle.build_hamiltonian(params, trunc), trunc)
    rows = []

    def add(name, analytic, numeric, tol_key):
        kind, tol = VERIFY_TOLERANCES[tol_key]
        diff = abs(numeric - analytic)
        bound = tol * abs(analytic) if kind == "rel" else tol
        rows.append(
            {
                "quantity": name,
                "analytic": analytic,
                "oracle": numeric,
                "abs_diff": diff,
                "tolerance": bound,
                "pass": "yes" if diff <= bound else "no",
            }
        )

    add("ground_energy_meV", result.ground.e_ground, state.energy, "ground_energy_meV")
    add("n_virtual", result.report.n_virtual, oracle.photon_number_numeric(state), "n_virtual")
    V_num = oracle.covariance_numeric(state, trunc)
    V_ana = result.covariance.V
    labels = ("x1", "p1", "x2", "p2")
    for i in range(4):
        for j in range(i, 4):
            add(f"V[{labels[i]},{labels[j]}]", V_ana[i, j], V_num[i, j], "covariance")
    add(
        "entropy_over_kB",
        result.report.entropy_over_kB,
        oracle.entropy_numeric(oracle.reduced_density_matrix(state, 1)),
        "entropy_over_kB",
    )
    if n_max <= oracle.NEGATIVITY_MAX_NMAX:
        add(
            "log_negativity",
            result.report.log_negativity,
            oracle.log_negativity_numeric(state, trunc),
            "log_negativity",
        )
    return rows


def cmd_verify(args):
    params = _params_from_args(args)
    rows = verification_rows(params, args.n_max)
    columns = ("quantity", "analytic", "oracle", "abs_diff", "tolerance", "pass")
    if args.format == "table":
        buf = io.StringIO()
        buf.write(
            f"{'quantity':<18} {'analytic':>20} {'oracle':>20} {'abs_diff':>10} "
            f"{'tolerance':>10}  pass\n"
        )
        for r in rows:
            buf.write(
                f"{r['quantity']:<18} {r['analytic']:>20.12g} {r['oracle']:>20.12g} "
                f"{r['abs_diff']:>10.2e} {r['tolerance']:>10.2e}  {r['pass']}\n"
            )
        text = buf.getvalue()
    else:
        text = _render(rows, columns, args.format)
    _emit(text, args.out)
    return EXIT_OK if all(r["pass"] == "yes" for r in rows) else EXIT_VERIFY_FAILED


def cmd_fit(args):
    if args.omega_0 is None:
        raise CLIError("--omega-0 is required", EXIT_PARAMETER)
    try:
        rows = fit_from_csv(args.csv_path, args.omega_0, args.variant)
    except OSError as exc:
        raise CLIError(f"cannot read {args.csv_path}: {exc}", EXIT_PARAMETER)
    buf = io.StringIO()
    write_fit_csv(rows, buf)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK if all(r["status"] == "ok" for r in rows) else EXIT_FIT_ROW_ERROR


COMMANDS = {
    "spectrum": cmd_point,
    "ground": cmd_point,
    "entangle": cmd_point,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "fit": cmd_fit,
}


def main(argv=None):
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InstabilityError as exc:
        print(f"instability: {exc}", file=sys.stderr)
        return EXIT_INSTABILITY
    except ConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (ParameterError, ConfigurationError, CSVParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
