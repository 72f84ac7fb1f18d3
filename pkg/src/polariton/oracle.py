"""Brute-force check of the analytic results in a truncated Fock basis.

The Hopfield Hamiltonian is written out as a dense real symmetric matrix on
``|n_a, n_b>``, ``0 <= n_a, n_b <= n_max`` (lexicographic, ``n_a`` major:
index ``n_a * (n_max + 1) + n_b``) and diagonalized with the in-repo Jacobi
solver. Nothing here uses the closed-form polariton solution.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import ConfigurationError, ParameterError
from .hopfield import resolve_coupling
from .jacobi import jacobi_eigh

__all__ = [
    "FockTruncation",
    "NumericalGroundState",
    "basis_index",
    "basis_labels",
    "build_hamiltonian",
    "block_eigh",
    "ground_state_numeric",
    "solve_ground_state",
    "quadrature_operators",
    "covariance_numeric",
    "photon_number_numeric",
    "reduced_density_matrix",
    "entropy_numeric",
    "partial_transpose",
    "log_negativity_numeric",
    "convergence_sweep",
]

NEGATIVITY_MAX_NMAX = 40


@dataclass(frozen=True)
class FockTruncation:
    n_max: int
    max_dim: int = 10_000

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise ConfigurationError(f"n_max must be an integer >= 2, got {self.n_max}")
        if self.dim > self.max_dim:
            raise ConfigurationError(
                f"basis dimension {self.dim} exceeds the cap of {self.max_dim} states"
            )

    @property
    def n_levels(self):
        return self.n_max + 1

    @property
    def dim(self):
        return self.n_levels**2


@dataclass(frozen=True)
class NumericalGroundState:
    energy: float
    amplitudes: np.ndarray
    n_max: int
    convergence_estimate: Optional[float] = None

    @property
    def matrix(self):
        """Amplitudes as an ``(n_levels, n_levels)`` array indexed ``[n_a, n_b]``."""
        n = self.n_max + 1
        return self.amplitudes.reshape(n, n)


def basis_index(n_a, n_b, trunc):
    return n_a * trunc.n_levels + n_b


def basis_labels(trunc):
    """Arrays ``(n_a, n_b)`` for every basis index."""
    return np.divmod(np.arange(trunc.dim), trunc.n_levels)


def _lowering(n_levels):
    return np.diag(np.sqrt(np.arange(1, n_levels, dtype=float)), 1)


def build_hamiltonian(params, trunc):
    """Dense Hamiltonian matrix in meV, including both zero-point terms."""
    Omega, G, _ = resolve_coupling(params)
    n = trunc.n_levels
    eye = np.eye(n)
    a = _lowering(n)
    number = np.diag(np.arange(n, dtype=float))
    x = a + a.T  # a + a^+, not normalized

    H = params.omega_c * np.kron(number + 0.5 * eye, eye)
    H += params.omega_0 * np.kron(eye, number + 0.5 * eye)
    H += Omega * np.kron(x, x)
    # (a + a^+)^2 from exact ladder elements, not the truncated product x @ x
    x_sq = a @ a + a.T @ a.T + 2.0 * number + eye
    H += G * np.kron(x_sq, eye)
    return H


def block_eigh(matrix, tol=1e-12):
    """Diagonalize each connected block of a sparse-patterned symmetric matrix.

    Returns a list of ``(indices, w, v)`` with ``matrix[ix_(indices, indices)]
    = v diag(w) v^T``. Blocks are found from exact zeros, so a parity-conserving
    Hamiltonian splits into its parity sectors.
    """
    m = np.asarray(matrix)
    n_comp, labels = connected_components(m != 0, directed=False)
    out = []
    for k in range(n_comp):
        idx = np.flatnonzero(labels == k)
        w, v = jacobi_eigh(m[np.ix_(idx, idx)], tol=tol)
        out.append((idx, w, v))
    return out


def ground_state_numeric(H, trunc, previous_energy=None):
    """Lowest eigenpair of ``H``, phase-fixed so that ``<0,0|psi> > 0``.

    ``previous_energy`` (ground energy at a smaller cutoff) is turned into
    the ``convergence_estimate``.
    """
    best = None
    for idx, w, v in block_eigh(H):
        if best is None or w[0] < best[0]:
            best = (w[0], idx, v[:, 0])
    energy, idx, vec = best
    psi = np.zeros(H.shape[0])
    psi[idx] = vec
    psi /= np.linalg.norm(psi)
    pivot = psi[0] if psi[0] != 0 else psi[np.argmax(np.abs(psi))]
    if pivot < 0:
        psi = -psi
    estimate = None if previous_energy is None else abs(energy - previous_energy)
    return NumericalGroundState(float(energy), psi, trunc.n_max, estimate)


def solve_ground_state(params, trunc, convergence=False):
    """Build and diagonalize; with ``convergence`` also solve at ``n_max - 4``."""
    previous = None
    if convergence and trunc.n_max - 4 >= 2:
        coarse = FockTruncation(trunc.n_max - 4, trunc.max_dim)
        previous = ground_state_numeric(build_hamiltonian(params, coarse), coarse).energy
    return ground_state_numeric(build_hamiltonian(params, trunc), trunc, previous)


def quadrature_operators(trunc):
    """Matrices of ``(x1, p1, x2, p2)`` on the two-mode truncated space.

    ``x = (a + a^+)/sqrt(2)``, ``p = (a - a^+)/(sqrt(2) i)``; ``p`` is complex.
    """
    n = trunc.n_levels
    eye = np.eye(n)
    a = _lowering(n)
    x = (a + a.T) / np.sqrt(2.0)
    p = (a - a.T) / (np.sqrt(2.0) * 1j)
    return (np.kron(x, eye), np.kron(p, eye), np.kron(eye, x), np.kron(eye, p))


def covariance_numeric(state, trunc, operators=None):
    """``V_ij = Re <psi| (xi_i xi_j + xi_j xi_i)/2 |psi>`` in the truncated basis."""
    ops = quadrature_operators(trunc) if operators is None else operators
    psi = state.amplitudes
    applied = [op @ psi for op in ops]
    V = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            # <psi|xi_i xi_j|psi> = (xi_i psi)^dagger (xi_j psi) for Hermitian xi_i
            V[i, j] = np.real(np.vdot(applied[i], applied[j]))
    return 0.5 * (V + V.T)


def reduced_density_matrix(state, mode):
    """Partial trace of ``|psi><psi|`` keeping ``mode`` (1 = cavity, 2 = matter)."""
    m = state.matrix
    if mode == 1:
        return m @ m.T
    if mode == 2:
        return m.T @ m
    raise ParameterError(f"mode must be 1 or 2, got {mode}")


def photon_number_numeric(state):
    """Cavity occupation ``tr(rho_1 n)``."""
    rho = reduced_density_matrix(state, 1)
    return float(np.sum(np.diag(rho) * np.arange(rho.shape[0])))


def entropy_numeric(rho, cutoff=1e-14):
    """Von Neumann entropy ``-sum lambda ln lambda`` (natural log)."""
    lam = np.concatenate([w for _, w, _ in block_eigh(rho)])
    lam = lam[lam > cutoff]
    return float(0.0 - np.sum(lam * np.log(lam)))


def partial_transpose(state):
    """``rho^{T_B}[(m, n), (m', n')] = rho[(m, n'), (m', n)]`` for ``rho = |psi><psi|``."""
    n = state.n_max + 1
    psi = state.amplitudes
    rho = np.outer(psi, psi).reshape(n, n, n, n)
    return rho.transpose(0, 3, 2, 1).reshape(n * n, n * n)


def log_negativity_numeric(state, trunc=None):
    """``log2 ||rho^{T_B}||_1`` from the eigenvalues of the partial transpose."""
    n_max = state.n_max if trunc is None else trunc.n_max
    if n_max > NEGATIVITY_MAX_NMAX:
        raise ConfigurationError(
            f"partial transpose limited to n_max <= {NEGATIVITY_MAX_NMAX}, got {n_max}"
        )
    pt = partial_transpose(state)
    trace_norm = sum(float(np.sum(np.abs(w))) for _, w, _ in block_eigh(pt))
    return float(max(np.log2(trace_norm), 0.0))


def convergence_sweep(params, n_max_list, negativity=True):
    """Ground energy, entropy and negativity for increasing cutoffs.

    Returns a list of dicts with keys ``n_max, energy, entropy_over_kB,
    log_negativity, delta_energy`` (change from the previous row, ``None``
    for the first).
    """
    rows = []
    previous = None
    for n_max in n_max_list:
        if previous is not None and n_max <= previous["n_max"]:
            raise ParameterError("n_max_list must be strictly ascending")
        trunc = FockTruncation(n_max)
        state = ground_state_numeric(build_hamiltonian(params, trunc), trunc)
        row = {
            "n_max": n_max,
            "energy": state.energy,
            "entropy_over_kB": entropy_numeric(reduced_density_matrix(state, 1)),
            "log_negativity": log_negativity_numeric(state) if negativity else None,
            "delta_energy": None if previous is None else abs(state.energy - previous["energy"]),
        }
        rows.append(row)
        previous = row
    return rows
