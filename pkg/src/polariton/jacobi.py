"""Dense symmetric eigensolver: cyclic Jacobi rotations with a threshold.

Used by the Fock-space oracle so that the brute-force path shares no
linear-algebra backend with the analytic one. The sweep kernel is compiled
with numba; a 500x500 Hamiltonian block converges in a few seconds.
"""

import numba
import numpy as np

from .errors import ConvergenceError

__all__ = ["jacobi_eigh"]


@numba.njit(cache=True)
def _sweep(a, vt, skip):
    # One cyclic sweep over all (p, q), p < q. `vt` stores eigenvectors as rows.
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if abs(apq) <= skip:
                continue
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            if tau >= 0.0:
                t = 1.0 / (tau + np.hypot(1.0, tau))
            else:
                t = -1.0 / (-tau + np.hypot(1.0, tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            for k in range(n):
                akp = a[k, p]
                akq = a[k, q]
                a[k, p] = c * akp - s * akq
                a[k, q] = s * akp + c * akq
            for k in range(n):
                apk = a[p, k]
                aqk = a[q, k]
                a[p, k] = c * apk - s * aqk
                a[q, k] = s * apk + c * aqk
            a[p, q] = 0.0
            a[q, p] = 0.0
            for k in range(n):
                vpk = vt[p, k]
                vqk = vt[q, k]
                vt[p, k] = c * vpk - s * vqk
                vt[q, k] = s * vpk + c * vqk


def off_diagonal_norm(a):
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(matrix, tol=1e-12, max_sweeps=100):
    """Eigen-decompose a real symmetric matrix.

    Parameters
    ----------
    matrix : array_like, shape (n, n)
        Real symmetric matrix (symmetrized on entry to remove rounding skew).
    tol : float
        Sweeps stop once the off-diagonal Frobenius norm drops below
        ``tol * ||matrix||_F``.
    max_sweeps : int
        Iteration cap; exceeding it raises :class:`ConvergenceError`.

    Returns
    -------
    w : ndarray, shape (n,)
        Eigenvalues in ascending order.
    v : ndarray, shape (n, n)
        Orthonormal eigenvectors as columns.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    a = np.ascontiguousarray(0.5 * (a + a.T))
    vt = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), vt

    scale = float(np.linalg.norm(a))
    threshold = tol * scale
    # rotations on entries this small cannot move the off-norm above threshold
    skip = threshold / n

    off = off_diagonal_norm(a)
    sweeps = 0
    while off > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off:.3e}, target {threshold:.3e}, n={n})"
            )
        _sweep(a, vt, skip)
        sweeps += 1
        off = off_diagonal_norm(a)

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], np.ascontiguousarray(vt[order].T)
