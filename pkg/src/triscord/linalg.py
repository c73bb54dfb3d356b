"""Dense-matrix kernels for small real-symmetric and 2x2 Hermitian matrices.

Everything in this module is sized for the three-qubit problem: 8x8 real
symmetric states, their 4x4 marginals, and the 2x2 complex Hermitian
conditional states produced by measurements.  Qubit ordering is fixed as
basis index k = 4*bit_A + 2*bit_B + bit_C throughout the package.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import NumericError

# Subsystem indices (qubit positions in the fixed ordering).
A, B, C = 0, 1, 2

_SUBSYSTEMS = {0: 0, 1: 1, 2: 2, "A": 0, "B": 1, "C": 2, "a": 0, "b": 1, "c": 2}

SYMMETRY_TOL = 1e-12
JACOBI_OFFDIAG_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class Hermitian2(NamedTuple):
    """A 2x2 complex Hermitian matrix: real diagonal (d0, d1), off-diagonal `off`."""

    d0: float
    d1: float
    off: complex


def _subsystem_index(subsystem) -> int:
    try:
        return _SUBSYSTEMS[subsystem]
    except KeyError:
        raise ValueError(f"subsystem must be one of A/B/C or 0/1/2, got {subsystem!r}")


def _check_square(m: np.ndarray, dim: int, name: str) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (dim, dim):
        raise ValueError(f"{name} must be {dim}x{dim}, got shape {m.shape}")
    return m


def partial_trace(rho: np.ndarray, subsystem) -> np.ndarray:
    """Trace out one qubit of an 8x8 three-qubit state, returning the 4x4 marginal."""
    rho = _check_square(rho, 8, "rho")
    k = _subsystem_index(subsystem)
    rho6 = rho.reshape(2, 2, 2, 2, 2, 2)
    reduced = np.trace(rho6, axis1=k, axis2=k + 3)
    return reduced.reshape(4, 4)


def partial_transpose(rho: np.ndarray, subsystem) -> np.ndarray:
    """Transpose one qubit's indices of an 8x8 state (rho^{t_subsystem})."""
    rho = _check_square(rho, 8, "rho")
    k = _subsystem_index(subsystem)
    rho6 = rho.reshape(2, 2, 2, 2, 2, 2)
    return np.swapaxes(rho6, k, k + 3).reshape(8, 8)


def jacobi_eigenvalues(m: np.ndarray, *, tol: float = JACOBI_OFFDIAG_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending, by cyclic Jacobi sweeps.

    Deterministic pure-numpy implementation, intentionally independent of any
    LAPACK eigensolver so it can serve as the numeric cross-check for the
    closed-form spectra.  Convergence: off-diagonal Frobenius norm below `tol`.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.ndim != 2 or m.shape != (n, n):
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    asym = float(np.max(np.abs(m - m.T))) if n > 1 else 0.0
    if asym > SYMMETRY_TOL:
        raise ValueError(f"matrix is not symmetric (max |m - m.T| = {asym:.3e})")

    a = 0.5 * (m + m.T)  # work on an exactly symmetric copy
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off < tol:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[[p, q], :] = rot @ a[[p, q], :]
                a[:, [p, q]] = a[:, [p, q]] @ rot.T
                a[p, q] = a[q, p] = 0.0  # exact zero by construction
    raise NumericError(f"Jacobi sweep did not converge in {max_sweeps} sweeps")


def hermitian2_eigenvalues(h: Hermitian2) -> tuple[float, float]:
    """Closed-form eigenvalues (ascending) of a 2x2 Hermitian matrix."""
    half_sum = 0.5 * (h.d0 + h.d1)
    half_diff = 0.5 * (h.d0 - h.d1)
    r = math.hypot(half_diff, abs(h.off))
    return half_sum - r, half_sum + r
