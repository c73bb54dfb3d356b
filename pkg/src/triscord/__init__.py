"""Tripartite quantum correlations of symmetric three-qubit X-states.

Closed-form genuine tripartite quantum discord, total/classical correlations
and tripartite negativity for the (a1, c1, c2) family, cross-validated by a
brute-force measurement-optimization oracle.
"""

from .correlations import (
    CondEntropyResult,
    CorrelationReport,
    LambdaSet,
    MeasurementAngles,
    conditional_entropy,
    gtqd,
    j3,
    lambda_set,
    negativity_analytic,
    negativity_numeric,
    report,
    s1,
    s2,
    s3,
    s3_applicable,
    s_rel,
    t3,
)
from .entropy import epsilon, gamma, mutual_info_ab, s_ab, s_total, von_neumann_numeric, xlog2
from .errors import (
    InvalidParamsError,
    NotAStateError,
    NotXStateError,
    NumericError,
    TriscordError,
)
from .linalg import (
    Hermitian2,
    hermitian2_eigenvalues,
    jacobi_eigenvalues,
    partial_trace,
    partial_transpose,
)
from .oracle import (
    CrossValidation,
    GridSpec,
    MeasurementOutcome,
    PvmPair,
    cross_validate,
    grid_minimize,
    measure,
    measured_entropy,
    pvm_pair,
    to_transformed,
)
from .xstate import (
    Violation,
    XParams,
    build_rho,
    ghz_component,
    is_valid,
    params_from_matrix,
    rho_eigenvalues_closed,
    sample_many,
    sample_params,
    validate,
)

__version__ = "0.1.0"
