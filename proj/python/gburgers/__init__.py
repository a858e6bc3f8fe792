"""Haar wavelet collocation solver for generalized Burgers-type equations."""

from ._gburgers import (
    ConfigError,
    ConvergenceRow,
    ErrorReport,
    FdReference,
    HaarBasis,
    ProblemSpec,
    ReconstructMode,
    RunResult,
    SolutionState,
    SolverError,
    WaveletIndex,
    build_basis,
    convergence_study,
    corner_mismatch,
    error_norms,
    expand,
    fd_reference_at,
    fd_solve,
    haar_eval,
    index_from_ordinal,
    make_problem,
    make_test_problem,
    p_eval,
    reconstruct,
    run,
    theoretical_bound,
)

__all__ = [
    "ConfigError",
    "ConvergenceRow",
    "ErrorReport",
    "FdReference",
    "HaarBasis",
    "ProblemSpec",
    "ReconstructMode",
    "RunResult",
    "SolutionState",
    "SolverError",
    "WaveletIndex",
    "build_basis",
    "convergence_study",
    "corner_mismatch",
    "error_norms",
    "expand",
    "fd_reference_at",
    "fd_solve",
    "haar_eval",
    "index_from_ordinal",
    "make_problem",
    "make_test_problem",
    "p_eval",
    "reconstruct",
    "run",
    "theoretical_bound",
]
