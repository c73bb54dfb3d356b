"""Symmetric three-qubit X-states and their (a1, c1, c2) parameter domain.

A state in this family is an 8x8 real density matrix whose only nonzero
entries sit on the main diagonal and anti-diagonal, is invariant under any
permutation of the three qubits and under flipping all of them, and is fully
described by three real numbers:

    corners          (1 - a1) / 8      (entries [0,0] and [7,7])
    corner coherence  c1 / 8           (entries [0,7] and [7,0])
    inner diagonal   (1 + a1/3) / 8    (entries [i,i], i = 1..6)
    inner coherence   c2 / 8           (entries [i,7-i], i = 1..6)

Positivity restricts the triple to a1 in [-3, 1], c1 in [a1-1, 1-a1],
c2 in [-1 - a1/3, 1 + a1/3] (closed intervals; the GHZ state sits exactly
on the boundary).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParamsError, NotXStateError

BOUNDARY_TOL = 1e-12
PATTERN_TOL = 1e-12

_INNER = (1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class XParams:
    """Parameter triple of a symmetric X-state."""

    a1: float
    c1: float
    c2: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a1, self.c1, self.c2)


@dataclass(frozen=True)
class Violation:
    """One violated parameter constraint: `value` left the interval [lo, hi]."""

    param: str
    value: float
    lo: float
    hi: float

    @property
    def margin(self) -> float:
        """Distance from the interval (how far outside the value sits)."""
        return max(self.lo - self.value, self.value - self.hi)

    def __str__(self) -> str:
        return (f"{self.param} = {self.value:g} out of [{self.lo:g}, {self.hi:g}] "
                f"(margin {self.margin:.3g})")


def validate(params: XParams) -> list[Violation]:
    """Check the positivity constraints; an empty list means the triple is valid."""
    a1, c1, c2 = params.as_tuple()
    bounds = [
        ("a1", a1, -3.0, 1.0),
        ("c1", c1, a1 - 1.0, 1.0 - a1),
        ("c2", c2, -1.0 - a1 / 3.0, 1.0 + a1 / 3.0),
    ]
    return [Violation(name, v, lo, hi) for name, v, lo, hi in bounds
            if v < lo - BOUNDARY_TOL or v > hi + BOUNDARY_TOL]


def is_valid(params: XParams) -> bool:
    return not validate(params)


def require_valid(params: XParams) -> XParams:
    """Raise InvalidParamsError (listing every violated constraint) unless valid."""
    report = validate(params)
    if report:
        raise InvalidParamsError("; ".join(str(v) for v in report))
    return params


def _x_matrix(a1: float, c1: float, c2: float) -> np.ndarray:
    rho = np.zeros((8, 8))
    corner = (1.0 - a1) / 8.0
    inner = (1.0 + a1 / 3.0) / 8.0
    rho[0, 0] = rho[7, 7] = corner
    rho[0, 7] = rho[7, 0] = c1 / 8.0
    for i in _INNER:
        rho[i, i] = inner
        rho[i, 7 - i] = c2 / 8.0
    return rho


def build_rho(params: XParams) -> np.ndarray:
    """The 8x8 density matrix of a valid parameter triple."""
    require_valid(params)
    return _x_matrix(*params.as_tuple())


def rho_eigenvalues_closed(params: XParams) -> np.ndarray:
    """The eight eigenvalues in closed form, ascending.

    The spectrum is {(1 - a1 -+ c1)/8} plus three copies each of
    {(3 + a1 -+ 3*c2)/24}.
    """
    require_valid(params)
    a1, c1, c2 = params.as_tuple()
    lam = [(1.0 - a1 - c1) / 8.0, (1.0 - a1 + c1) / 8.0]
    lam += 3 * [(3.0 + a1 - 3.0 * c2) / 24.0]
    lam += 3 * [(3.0 + a1 + 3.0 * c2) / 24.0]
    return np.sort(np.array(lam))


def ghz_component(k: int, sign: int) -> np.ndarray:
    """Rank-1 projector onto (|k> +- |k_bar>)/sqrt(2), k_bar = bitwise complement of k.

    `k` is a three-bit index (0..7); `sign` is +1 or -1.
    """
    if not 0 <= k <= 7:
        raise ValueError(f"k must be in 0..7, got {k}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    kbar = 7 - k
    rho = np.zeros((8, 8))
    rho[k, k] = rho[kbar, kbar] = 0.5
    rho[k, kbar] = rho[kbar, k] = 0.5 * sign
    return rho


def params_from_matrix(rho: np.ndarray, *, tol: float = PATTERN_TOL) -> XParams:
    """Invert an 8x8 matrix with the symmetric X pattern back to its triple.

    Entries within each pattern group (corners, inner diagonal, corner
    coherences, inner coherences) are averaged first, so arithmetic noise up
    to `tol` is absorbed; any entry further than `tol` from its group value
    (or any off-pattern entry above `tol`) raises NotXStateError.
    """
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (8, 8):
        raise NotXStateError(f"expected an 8x8 matrix, got shape {rho.shape}")

    corner = 0.5 * (rho[0, 0] + rho[7, 7])
    corner_coh = 0.5 * (rho[0, 7] + rho[7, 0])
    inner = np.mean([rho[i, i] for i in _INNER])
    inner_coh = np.mean([rho[i, 7 - i] for i in _INNER])

    params = XParams(a1=1.0 - 8.0 * corner, c1=8.0 * corner_coh, c2=8.0 * inner_coh)
    expected = _x_matrix(*params.as_tuple())
    # inner diagonal is tied to a1; a mismatch there (e.g. trace != 1) must fail too
    diff = np.abs(rho - expected)
    if np.max(diff) > tol:
        i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
        raise NotXStateError(
            f"entry [{i},{j}] = {rho[i, j]:.15g} deviates from the symmetric X "
            f"pattern by {diff[i, j]:.3e}")
    return params


def sample_params(seed: int) -> XParams:
    """One valid triple drawn per-coordinate uniformly, deterministic in `seed`.

    a1 is uniform on [-3, 1]; c1 and c2 are then uniform on their
    a1-conditional intervals.
    """
    return _draw(np.random.default_rng(seed))


def sample_many(seed: int, n: int) -> list[XParams]:
    """`n` triples from a single generator seeded once (the batch sampling stream)."""
    rng = np.random.default_rng(seed)
    return [_draw(rng) for _ in range(n)]


def _draw(rng: np.random.Generator) -> XParams:
    a1 = rng.uniform(-3.0, 1.0)
    c1 = rng.uniform(a1 - 1.0, 1.0 - a1)
    c2 = rng.uniform(-1.0 - a1 / 3.0, 1.0 + a1 / 3.0)
    return XParams(a1, c1, c2)
