"""Matrix product state families on spin chains.

Thin Python layer over the C++ core: build tensor families, check the
normalization and consistency conditions that guarantee a well-defined
infinite-volume state, evaluate that state with both the statevector and
transfer-operator engines, and compute reduced density matrices and
entanglement entropy. Matrices cross the boundary as complex NumPy arrays.
"""

from ._core import (
    ConditionReport,
    DensityMatrix,
    EvaluationReport,
    LocalObservable,
    MPSFamily,
    ParseError,
    ResourceError,
    StateVector,
    TraceIdentityCheck,
    ValidationError,
    __version__,
    amplitude,
    build_statevector,
    chain_product,
    check_consistency,
    check_normalization,
    check_projectivity,
    dagger,
    evaluate_naive,
    evaluate_trace_identity,
    evaluate_transfer,
    family_from_json,
    family_to_json,
    ghz_expectation_closed_form,
    ghz_family,
    hermitian_eigenvalues,
    kron,
    norm_squared,
    observable_from_json,
    observable_to_json,
    partial_trace_last,
    projector_family,
    reduced_density_matrix,
    trace,
    validate_density_matrix,
    verify_trace_identity,
    von_neumann_entropy,
)

__all__ = [
    "ConditionReport",
    "DensityMatrix",
    "EvaluationReport",
    "LocalObservable",
    "MPSFamily",
    "ParseError",
    "ResourceError",
    "StateVector",
    "TraceIdentityCheck",
    "ValidationError",
    "__version__",
    "amplitude",
    "build_statevector",
    "chain_product",
    "check_consistency",
    "check_normalization",
    "check_projectivity",
    "dagger",
    "evaluate_naive",
    "evaluate_trace_identity",
    "evaluate_transfer",
    "family_from_json",
    "family_to_json",
    "ghz_expectation_closed_form",
    "ghz_family",
    "hermitian_eigenvalues",
    "kron",
    "norm_squared",
    "observable_from_json",
    "observable_to_json",
    "partial_trace_last",
    "projector_family",
    "reduced_density_matrix",
    "trace",
    "validate_density_matrix",
    "verify_trace_identity",
    "von_neumann_entropy",
]
