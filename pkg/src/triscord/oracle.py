"""First-principles measurement oracle for the conditional entropy.

This module never touches the closed-form branch expressions: it builds
explicit product projective measurements on qubits B and C, projects the
8x8 state, and minimizes the average post-measurement entropy of qubit A by
exhaustive grid search (optionally polished by coordinate descent).  Its only
job is to certify the analytic pipeline in `correlations`.

Raw measurement angles are (theta1, phi1, theta2, phi2): (theta1, phi1)
parametrize the B basis, (theta2, phi2) the C basis.  The closed-form lambda
expressions use transformed phases instead; the mapping (fixed empirically
against this oracle) is

    phi1_transformed = phi1 - phi2,    phi2_transformed = phi1 + phi2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import correlations
from .correlations import MeasurementAngles
from .entropy import xlog2
from .linalg import Hermitian2, hermitian2_eigenvalues
from .xstate import XParams, build_rho, require_valid

ZERO_PROB = 1e-14
GRID_TOLERANCE = 2e-3
REFINED_TOLERANCE = 1e-6
ORDERING_SLACK = 1e-9

RawAngles = tuple[float, float, float, float]


@dataclass(frozen=True)
class PvmPair:
    """Product measurement bases on B and C: rows of basis_b / basis_c are the
    two orthonormal basis vectors of each qubit."""

    basis_b: np.ndarray
    basis_c: np.ndarray
    raw_angles: RawAngles


@dataclass(frozen=True)
class MeasurementOutcome:
    """One of the four outcomes: probability and normalized conditional state
    of qubit A (None when the outcome has zero probability)."""

    p: float
    conditional: Hermitian2 | None


@dataclass(frozen=True)
class GridSpec:
    """Search grid: n_theta points over [0, pi), n_phi over [0, 2*pi)."""

    n_theta: int = 48
    n_phi: int = 48
    refine: bool = True

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 2:
            raise ValueError("grid needs at least 2 points per angle")

    @property
    def tolerance(self) -> float:
        return REFINED_TOLERANCE if self.refine else GRID_TOLERANCE


@dataclass(frozen=True)
class CrossValidation:
    """Analytic-vs-oracle comparison for one parameter triple."""

    params: XParams
    analytic: float
    branch: str
    oracle: float
    oracle_grid: float
    gap: float
    gap_grid: float
    argmin: RawAngles
    passed: bool


def _basis(theta: float, phi: float) -> np.ndarray:
    """Orthonormal qubit basis: rows (cos t, e^{i p} sin t), (sin t, -e^{i p} cos t)."""
    ct, st = math.cos(theta), math.sin(theta)
    ph = complex(math.cos(phi), math.sin(phi))
    return np.array([[ct, ph * st], [st, -ph * ct]])


def pvm_pair(raw_angles: RawAngles) -> PvmPair:
    """Build the product measurement bases for raw angles (t1, p1, t2, p2)."""
    t1, p1, t2, p2 = raw_angles
    return PvmPair(_basis(t1, p1), _basis(t2, p2), (t1, p1, t2, p2))


def to_transformed(raw_angles: RawAngles) -> MeasurementAngles:
    """Map raw angles to the phase convention of the closed-form expressions."""
    t1, p1, t2, p2 = raw_angles
    return MeasurementAngles(t1, t2, p1 - p2, p1 + p2)


def _conditional_blocks(rho: np.ndarray, pvm: PvmPair) -> np.ndarray:
    """Unnormalized 2x2 conditional states of A, indexed [i, j, a, a']."""
    rho6 = np.asarray(rho, dtype=float).reshape(2, 2, 2, 2, 2, 2)
    proj_b = np.einsum('im,in->imn', pvm.basis_b, pvm.basis_b.conj())
    proj_c = np.einsum('jm,jn->jmn', pvm.basis_c, pvm.basis_c.conj())
    # rho_tilde[a,a'] = sum P_B[b,b'] P_C[c,c'] rho[(a,b',c'), (a',b,c)]
    return np.einsum('ixy,juv,ayvAxu->ijaA', proj_b, proj_c, rho6)


def measure(rho: np.ndarray, pvm: PvmPair) -> list[MeasurementOutcome]:
    """The four measurement outcomes of a product PVM on qubits B and C."""
    blocks = _conditional_blocks(rho, pvm)
    outcomes = []
    for i in range(2):
        for j in range(2):
            blk = blocks[i, j]
            p = float(blk[0, 0].real + blk[1, 1].real)
            if p < ZERO_PROB:
                outcomes.append(MeasurementOutcome(max(p, 0.0), None))
                continue
            cond = Hermitian2(blk[0, 0].real / p, blk[1, 1].real / p,
                              complex(blk[0, 1]) / p)
            outcomes.append(MeasurementOutcome(p, cond))
    return outcomes


def measured_entropy(rho: np.ndarray, pvm: PvmPair) -> float:
    """Average post-measurement entropy of qubit A, sum_ij p_ij * S(cond_ij)."""
    total = 0.0
    for out in measure(rho, pvm):
        if out.conditional is None:
            continue
        lo, hi = hermitian2_eigenvalues(out.conditional)
        total += out.p * (-xlog2(max(lo, 0.0)) - xlog2(max(hi, 0.0)))
    return total


def _entropy_at(rho6: np.ndarray, angles: RawAngles) -> float:
    """Fast pointwise entropy used by the refinement loop."""
    t1, p1, t2, p2 = angles
    pb = _basis(t1, p1)
    pc = _basis(t2, p2)
    proj_b = np.einsum('im,in->imn', pb, pb.conj())
    proj_c = np.einsum('jm,jn->jmn', pc, pc.conj())
    blocks = np.einsum('ixy,juv,ayvAxu->ijaA', proj_b, proj_c, rho6)
    total = 0.0
    for i in range(2):
        for j in range(2):
            x = blocks[i, j, 0, 0].real
            y = blocks[i, j, 1, 1].real
            p = x + y
            if p < ZERO_PROB:
                continue
            r = math.hypot(x - y, 2.0 * abs(blocks[i, j, 0, 1]))
            total += (xlog2(p) - xlog2(max(0.5 * (p + r), 0.0))
                      - xlog2(max(0.5 * (p - r), 0.0)))
    return total


_projector_cache: dict[tuple[int, int], tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _projector_parts(n_theta: int, n_phi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Real and imaginary parts of the flattened first-outcome projector
    |b1(theta, phi)><b1| over the grid (two (n_theta*n_phi, 4) float32 arrays,
    theta-major rows, columns P[b, b'] flat) plus their stacked transpose for
    use as a shared right-hand matmul factor.  State-independent, so cached."""
    key = (n_theta, n_phi)
    if key not in _projector_cache:
        thetas = np.linspace(0.0, math.pi, n_theta, endpoint=False)
        phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
        tt, pp = np.meshgrid(thetas, phis, indexing='ij')
        ct, st = np.cos(tt).ravel(), np.sin(tt).ravel()
        cp, sp = np.cos(pp.ravel()), np.sin(pp.ravel())
        re = np.stack([ct * ct, ct * st * cp, ct * st * cp, st * st], axis=1)
        im = np.stack([np.zeros_like(ct), -ct * st * sp, ct * st * sp,
                       np.zeros_like(ct)], axis=1)
        re32, im32 = re.astype(np.float32), im.astype(np.float32)
        both_t = np.ascontiguousarray(np.concatenate([re32, im32], axis=1).T)
        _projector_cache[key] = (re32, im32, both_t)
    return _projector_cache[key]


def _xlog2_arr(x: np.ndarray) -> np.ndarray:
    safe = np.where(x > 0.0, x, np.float32(1.0))
    return safe * np.log2(safe)


def _entropy_grid(rho: np.ndarray, n_theta: int, n_phi: int) -> np.ndarray:
    """Measured entropy over the full product angle grid.

    Returns E with axes (theta1, theta2, phi1, phi2).  Each grid evaluation
    reduces to three bilinear forms of the state in the flattened B- and
    C-side projectors (trace, population imbalance and coherence of the
    conditional block of qubit A); only the first outcome per side needs a
    matrix product, the rest follow from completeness Pi_2 = I - Pi_1.
    Evaluated in float32: grid values only locate the minimum and are always
    polished or tolerance-checked far above float32 noise.
    """
    rho6 = np.asarray(rho, dtype=float).reshape(2, 2, 2, 2, 2, 2)
    # k[bb', cc', a, a'] = rho[(a,b',c'), (a',b,c)]
    k = rho6.transpose(4, 1, 5, 2, 0, 3).reshape(4, 4, 2, 2)
    re, im, both_t = _projector_parts(n_theta, n_phi)
    ident = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.float32)  # flattened I_2

    def bilinear(kf: np.ndarray, part: str):
        """u_g K v_h^T over the first-outcome grid rows, plus the border
        contractions against the identity row (-> other outcomes)."""
        kf = kf.astype(np.float32)
        a, b = re @ kf, im @ kf
        right = kf.T @ ident
        if part == "re":
            # Re(u K v^T) = re K re^T - im K im^T
            return (np.concatenate([a, -b], axis=1) @ both_t,
                    a @ ident, re @ right, float(ident @ (kf @ ident)))
        # Im(u K v^T) = re K im^T + im K re^T
        return np.concatenate([b, a], axis=1) @ both_t, b @ ident, im @ right, 0.0

    quantities = (
        bilinear(k[:, :, 0, 0] + k[:, :, 1, 1], "re"),   # trace part -> p_ij
        bilinear(k[:, :, 0, 0] - k[:, :, 1, 1], "re"),   # population imbalance
        bilinear(k[:, :, 0, 1], "re"),                   # coherence, real part
        bilinear(k[:, :, 0, 1], "im"),                   # coherence, imag part
    )

    n_pairs = re.shape[0]
    total = np.zeros((n_pairs, n_pairs), dtype=np.float32)
    for oi in (0, 1):
        for oj in (0, 1):
            s, d, wr, wi = (
                q11 if (oi, oj) == (0, 0)
                else left[:, None] - q11 if (oi, oj) == (0, 1)
                else right[None, :] - q11 if (oi, oj) == (1, 0)
                else (full - left[:, None]) - (right[None, :] - q11)
                for q11, left, right, full in quantities)
            r = np.sqrt(d * d + 4.0 * (wr * wr + wi * wi))
            # p * H2(mu_hi / p) written with x*log2(x) terms
            mu_hi = np.float32(0.5) * (s + r)
            mu_lo = s - mu_hi
            total += _xlog2_arr(s) - _xlog2_arr(mu_hi) - _xlog2_arr(mu_lo)

    return total.astype(float).reshape(n_theta, n_phi, n_theta, n_phi).transpose(0, 2, 1, 3)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_section(f, lo: float, hi: float, tol: float = 1e-9) -> tuple[float, float]:
    """Golden-section minimum of f on [lo, hi]; returns (x, f(x))."""
    a, b = lo, hi
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def _refine(rho6: np.ndarray, start: RawAngles, steps: tuple[float, ...],
            cycles: int = 3) -> tuple[float, RawAngles]:
    """Cyclic coordinate descent (golden section per angle) from a grid point."""
    angles = list(start)
    value = _entropy_at(rho6, tuple(angles))
    for _ in range(cycles):
        for idx, step in enumerate(steps):
            def line(x, idx=idx):
                probe = angles.copy()
                probe[idx] = x
                return _entropy_at(rho6, tuple(probe))

            x, v = _golden_section(line, angles[idx] - step, angles[idx] + step)
            if v < value:
                angles[idx], value = x, v
    return value, tuple(angles)


def grid_minimize(rho: np.ndarray, spec: GridSpec = GridSpec()) -> tuple[float, RawAngles]:
    """Global minimum of the measured entropy over the angle grid.

    Deterministic: grid ties are broken by the first point in lexicographic
    (theta1, theta2, phi1, phi2) order; refinement (when enabled) walks
    downhill from that point only.
    """
    thetas = np.linspace(0.0, math.pi, spec.n_theta, endpoint=False)
    phis = np.linspace(0.0, 2.0 * math.pi, spec.n_phi, endpoint=False)
    grid = _entropy_grid(rho, spec.n_theta, spec.n_phi)
    flat = int(np.argmin(grid))
    it1, it2, ip1, ip2 = np.unravel_index(flat, grid.shape)
    best = (thetas[it1], phis[ip1], thetas[it2], phis[ip2])
    value = float(grid[it1, it2, ip1, ip2])
    if not spec.refine:
        return value, best
    rho6 = np.asarray(rho, dtype=float).reshape(2, 2, 2, 2, 2, 2)
    theta_step = math.pi / spec.n_theta
    phi_step = 2.0 * math.pi / spec.n_phi
    refined, angles = _refine(rho6, best, (theta_step, phi_step, theta_step, phi_step))
    if refined <= value:
        return refined, angles
    return value, best


def cross_validate(params: XParams, spec: GridSpec = GridSpec()) -> CrossValidation:
    """Compare the closed-form conditional entropy against the oracle minimum.

    PASS requires the raw grid minimum within GRID_TOLERANCE of the analytic
    value, the refined minimum (when refinement is on) within the spec
    tolerance, and the analytic value never above the oracle by more than
    ORDERING_SLACK.
    """
    require_valid(params)
    cond = correlations.conditional_entropy(params)
    rho = build_rho(params)

    grid_only = GridSpec(spec.n_theta, spec.n_phi, refine=False)
    grid_value, grid_argmin = grid_minimize(rho, grid_only)
    if spec.refine:
        rho6 = rho.reshape(2, 2, 2, 2, 2, 2)
        steps = (math.pi / spec.n_theta, 2.0 * math.pi / spec.n_phi) * 2
        value, argmin = _refine(rho6, grid_argmin, (steps[0], steps[1], steps[0], steps[1]))
        if value > grid_value:
            value, argmin = grid_value, grid_argmin
    else:
        value, argmin = grid_value, grid_argmin

    gap = value - cond.value
    gap_grid = grid_value - cond.value
    passed = (gap_grid <= GRID_TOLERANCE
              and (not spec.refine or abs(gap) <= REFINED_TOLERANCE)
              and value >= cond.value - ORDERING_SLACK)
    return CrossValidation(params=params, analytic=cond.value, branch=cond.branch,
                           oracle=value, oracle_grid=grid_value, gap=gap,
                           gap_grid=gap_grid, argmin=argmin, passed=passed)
