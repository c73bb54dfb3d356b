"""Scalar entropy primitives and closed-form entropies of the X-state family.

All entropies are base-2.  The x*log2(x) summand uses the 0*log(0) = 0
convention; boundary states (pure GHZ) hit exact zeros that float arithmetic
can render as tiny negatives, so arguments in [-1e-12, 0) are clamped to 0.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidParamsError, NotAStateError
from .linalg import jacobi_eigenvalues
from .xstate import XParams, require_valid

ZERO_CLAMP = 1e-12
EIGENVALUE_CLAMP = 1e-10

LOG2_3 = math.log2(3.0)


def xlog2(x: float) -> float:
    """x * log2(x), with xlog2(0) = 0.  Negative x beyond -1e-12 is a domain error."""
    if x <= 0.0:
        if x < -ZERO_CLAMP:
            raise InvalidParamsError(f"xlog2 argument {x:.3e} is negative")
        return 0.0
    return x * math.log2(x)


def epsilon(x: float) -> float:
    """(1+x)log2(1+x) + (1-x)log2(1-x): even, 0 at x=0, 2 at x=+-1."""
    ax = abs(x)
    if ax > 1.0:
        if ax > 1.0 + ZERO_CLAMP:
            raise InvalidParamsError(f"epsilon argument {x:.15g} outside [-1, 1]")
        ax = 1.0
    return xlog2(1.0 + ax) + xlog2(1.0 - ax)


def gamma(x: float) -> float:
    """(3+x)log2(3+x) + (3-3x)log2(3-3x) - 2(3-x)log2(3-x), for x in [-3, 1]."""
    if x < -3.0 - ZERO_CLAMP or x > 1.0 + ZERO_CLAMP:
        raise InvalidParamsError(f"gamma argument {x:.15g} outside [-3, 1]")
    return xlog2(3.0 + x) + xlog2(3.0 - 3.0 * x) - 2.0 * xlog2(3.0 - x)


def s_total(params: XParams) -> float:
    """Von Neumann entropy of the full 8x8 state, in closed form."""
    require_valid(params)
    a1, c1, c2 = params.as_tuple()
    return 3.0 + 0.125 * (
        2.0 * (3.0 + a1) * LOG2_3
        - xlog2(1.0 - a1 - c1) - xlog2(1.0 - a1 + c1)
        - xlog2(3.0 + a1 - 3.0 * c2) - xlog2(3.0 + a1 + 3.0 * c2))


def s_ab(params: XParams) -> float:
    """Entropy of the two-qubit marginal; depends only on a1 and lies in [1, 2]."""
    require_valid(params)
    a1 = params.a1
    return 2.0 + LOG2_3 - (xlog2(3.0 - a1) + xlog2(3.0 + a1)) / 6.0


def mutual_info_ab(params: XParams) -> float:
    """Two-qubit mutual information.  Single-qubit marginals are maximally
    mixed for this family, so I(A:B) = 2 - S(rho_AB)."""
    return 2.0 - s_ab(params)


def von_neumann_numeric(rho: np.ndarray) -> float:
    """-sum(lam * log2(lam)) over the Jacobi eigenvalues of a density matrix."""
    total = 0.0
    for lam in jacobi_eigenvalues(rho):
        if lam < -EIGENVALUE_CLAMP:
            raise NotAStateError(f"eigenvalue {lam:.3e} below -{EIGENVALUE_CLAMP:g}")
        total -= xlog2(max(lam, 0.0))
    return total
