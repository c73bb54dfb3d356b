"""Closed-form tripartite correlation measures for symmetric X-states.

The central object is the measured conditional entropy S(rho_A|BC): the
minimum, over product projective measurements on qubits B and C, of the
average post-measurement entropy of qubit A.  For this family the minimum is
always attained at one of three measurement configurations, giving three
closed-form candidates:

    S1 = 1 - gamma(a1)/12                       at angles (0, 0, 0, 0)
    S2 = 1 - epsilon((3*c2 + c1)/4)/2           at angles (pi/4, pi/4, 0, 0)
    S3 = 1 - epsilon(sqrt((c1-c2)^3/c1)/4)/2    at angles (pi/4, pi/4, 0, phi2_bar)

with phi2_bar = arccos(-(c1+c2)/(2*c1)).  S3 exists only when that arccos
argument lies in [-1, 1] and (c1-c2)/c1 >= 0.  When both S2 and S3 exist,
S3 < S2 exactly when c1*c2 < 0, which collapses the minimization to:

    min{S1, S3}   if |3*c1| >= |c2| and c1*c2 < 0
    min{S1, S2}   otherwise

From the conditional entropy: D3 = S(rho_A|BC) + S(rho_AB) - S(rho) is the
genuine tripartite quantum discord, T3 = 1 + S(rho_AB) - S(rho) the genuine
total correlations, and J3 = 1 - S(rho_A|BC) the genuine classical part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import entropy, linalg, xstate
from .entropy import epsilon, gamma, xlog2
from .errors import NumericError
from .xstate import XParams, require_valid

RADICAND_TOL = 1e-12
EPS_ARG_TOL = 1e-9
TIE_TOL = 1e-12
NEG_CLAMP = 1e-10

BRANCHES = ("S1", "S2", "S3")


class MeasurementAngles(NamedTuple):
    """Measurement angles in the transformed phase convention.

    theta1, theta2 parametrize the B and C measurement bases; phi1 and phi2
    are the difference and sum of the raw basis phases (see oracle module).
    """

    theta1: float
    theta2: float
    phi1: float
    phi2: float


class LambdaSet(NamedTuple):
    """The seven spectral weights entering the measured conditional entropy.

    lambda_a + lambda_b = 6, lambda_1 + lambda_2 = 2*lambda_b and
    lambda_3 + lambda_4 = 2*lambda_a; all of lambda_1..4 are nonnegative for
    valid states.
    """

    lambda_a: float
    lambda_b: float
    lambda_c: float
    lambda_1: float
    lambda_2: float
    lambda_3: float
    lambda_4: float


@dataclass(frozen=True)
class CondEntropyResult:
    """Minimized conditional entropy with the winning branch and its angles."""

    value: float
    branch: str
    angles: MeasurementAngles
    candidates: dict[str, float | None]


@dataclass(frozen=True)
class CorrelationReport:
    """All correlation quantities of one parameter triple."""

    params: XParams
    s_rho: float
    s_ab: float
    s_cond: float
    branch: str
    d3: float
    t3: float
    j3: float
    n3: float


def _sqrt_clamped(radicand: float) -> float:
    if radicand < 0.0:
        if radicand < -RADICAND_TOL:
            raise NumericError(f"negative radicand {radicand:.3e}")
        return 0.0
    return math.sqrt(radicand)


def lambda_set(params: XParams, angles: MeasurementAngles) -> LambdaSet:
    """Evaluate the seven lambda weights at one measurement configuration."""
    require_valid(params)
    a1, c1, c2 = params.as_tuple()
    t1, t2, p1, p2 = angles
    ct1, ct2 = math.cos(2.0 * t1), math.cos(2.0 * t2)
    lam_a = 3.0 + a1 * ct1 * ct2
    lam_b = 3.0 - a1 * ct1 * ct2
    bracket = ((c1 - c2) ** 2
               + 4.0 * c2 * (math.cos(p1) + math.cos(p2))
               * (c2 * math.cos(p1) + c1 * math.cos(p2)))
    lam_c = (9.0 / 16.0) * math.sin(2.0 * t1) ** 2 * math.sin(2.0 * t2) ** 2 * bracket
    if lam_c < 0.0:
        if lam_c < -RADICAND_TOL:
            raise NumericError(f"negative lambda_c {lam_c:.3e}")
        lam_c = 0.0
    r12 = _sqrt_clamped(a1 * a1 * (ct1 + ct2) ** 2 + lam_c)
    r34 = _sqrt_clamped(a1 * a1 * (ct1 - ct2) ** 2 + lam_c)
    return LambdaSet(lam_a, lam_b, lam_c,
                     lam_b + r12, lam_b - r12, lam_a + r34, lam_a - r34)


def s_rel(params: XParams, angles: MeasurementAngles) -> float:
    """Average post-measurement entropy of qubit A at fixed angles, in [0, 1]."""
    lam = lambda_set(params, angles)
    tail = sum(xlog2(max(v, 0.0)) for v in
               (lam.lambda_1, lam.lambda_2, lam.lambda_3, lam.lambda_4))
    return 1.0 + (xlog2(lam.lambda_a) + xlog2(lam.lambda_b)) / 6.0 - tail / 12.0


def s1(params: XParams) -> float:
    """Conditional-entropy candidate at the axis-aligned measurement."""
    require_valid(params)
    return 1.0 - gamma(params.a1) / 12.0


def _eps_half(arg: float) -> float:
    # the S2/S3 arguments can exceed 1 only through float noise at the
    # domain boundary; clamp a whisker, reject anything larger
    if arg > 1.0:
        if arg > 1.0 + EPS_ARG_TOL:
            raise NumericError(f"entropy-estimator argument {arg:.15g} > 1")
        arg = 1.0
    return 1.0 - 0.5 * epsilon(arg)


def s2(params: XParams) -> float:
    """Conditional-entropy candidate at the balanced measurement, phases zero."""
    require_valid(params)
    return _eps_half(abs(3.0 * params.c2 + params.c1) / 4.0)


def s3_applicable(params: XParams) -> bool:
    """Whether the third candidate's stationary phase exists for this triple."""
    require_valid(params)
    c1, c2 = params.c1, params.c2
    if c1 == 0.0:
        return False
    if abs(c1 + c2) > 2.0 * abs(c1):          # arccos argument outside [-1, 1]
        return False
    ratio = (c1 - c2) / c1
    if ratio < 0.0:                           # radicand of the epsilon argument
        return False
    return (c1 - c2) ** 2 * ratio <= 16.0 * (1.0 + EPS_ARG_TOL) ** 2


def phi2_bar(params: XParams) -> float:
    """The stationary phase arccos(-(c1+c2)/(2*c1)) of the third candidate."""
    require_valid(params)
    c1, c2 = params.c1, params.c2
    if c1 == 0.0:
        raise NumericError("phi2_bar undefined for c1 = 0")
    return math.acos(min(1.0, max(-1.0, -(c1 + c2) / (2.0 * c1))))


def s3(params: XParams) -> float | None:
    """Conditional-entropy candidate at the stationary phase, or None if absent."""
    if not s3_applicable(params):
        return None
    c1, c2 = params.c1, params.c2
    return _eps_half(0.25 * math.sqrt(max((c1 - c2) ** 3 / c1, 0.0)))


_QUARTER = math.pi / 4.0


def conditional_entropy(params: XParams) -> CondEntropyResult:
    """Minimized conditional entropy S(rho_A|BC) with branch bookkeeping.

    Ties within 1e-12 are broken toward S1, then S2, then S3, so the reported
    branch is deterministic; the value itself is unaffected.
    """
    require_valid(params)
    c1, c2 = params.c1, params.c2
    v1, v2, v3 = s1(params), s2(params), s3(params)
    candidates: dict[str, float | None] = {"S1": v1, "S2": v2, "S3": v3}

    if abs(3.0 * c1) >= abs(c2) and c1 * c2 < 0.0 and v3 is not None:
        contenders = [("S1", v1), ("S3", v3)]
    else:
        contenders = [("S1", v1), ("S2", v2)]

    branch, value = contenders[0]
    for name, v in contenders[1:]:
        if v < value - TIE_TOL:
            branch, value = name, v

    if branch == "S1":
        angles = MeasurementAngles(0.0, 0.0, 0.0, 0.0)
    elif branch == "S2":
        angles = MeasurementAngles(_QUARTER, _QUARTER, 0.0, 0.0)
    else:
        angles = MeasurementAngles(_QUARTER, _QUARTER, 0.0, phi2_bar(params))
    return CondEntropyResult(value, branch, angles, candidates)


def _clamp_tiny_negative(x: float, window: float) -> float:
    return 0.0 if -window <= x < 0.0 else x


def gtqd(params: XParams) -> float:
    """Genuine tripartite quantum discord D3 = S(rho_A|BC) + S(rho_AB) - S(rho)."""
    raw = (conditional_entropy(params).value
           + entropy.s_ab(params) - entropy.s_total(params))
    return _clamp_tiny_negative(raw, NEG_CLAMP)


def t3(params: XParams) -> float:
    """Genuine tripartite total correlations, 1 + S(rho_AB) - S(rho)."""
    return 1.0 + entropy.s_ab(params) - entropy.s_total(params)


def j3(params: XParams) -> float:
    """Genuine tripartite classical correlations, 1 - S(rho_A|BC)."""
    return 1.0 - conditional_entropy(params).value


def negativity_analytic(params: XParams) -> float:
    """Tripartite negativity in closed form (any bipartition; they coincide)."""
    require_valid(params)
    a1, c1, c2 = params.as_tuple()
    total = (abs(3.0 + a1 - 3.0 * c1) + abs(3.0 + a1 + 3.0 * c1)
             + 2.0 * abs(3.0 + a1 - 3.0 * c2) + 2.0 * abs(3.0 + a1 + 3.0 * c2)
             + 3.0 * abs(1.0 - a1 - c2) + 3.0 * abs(1.0 - a1 + c2))
    return _clamp_tiny_negative(total / 24.0 - 1.0, RADICAND_TOL)


def negativity_numeric(rho: np.ndarray, subsystem=linalg.C) -> float:
    """sum|eig| - 1 over the partial transpose, via the Jacobi eigensolver."""
    eigs = linalg.jacobi_eigenvalues(linalg.partial_transpose(rho, subsystem))
    return float(np.sum(np.abs(eigs))) - 1.0


def report(params: XParams) -> CorrelationReport:
    """Assemble every correlation quantity for one triple."""
    require_valid(params)
    cond = conditional_entropy(params)
    s_rho = entropy.s_total(params)
    s_marg = entropy.s_ab(params)
    return CorrelationReport(
        params=params,
        s_rho=s_rho,
        s_ab=s_marg,
        s_cond=cond.value,
        branch=cond.branch,
        d3=_clamp_tiny_negative(cond.value + s_marg - s_rho, NEG_CLAMP),
        t3=1.0 + s_marg - s_rho,
        j3=1.0 - cond.value,
        n3=negativity_analytic(params),
    )
