"""Universal-entangler gate testing toolkit.

Thin Python surface over the C++ core: builtin gates, separability
residuals, entanglement entropies, the counterexample searches and the
reproducible sampling helpers.
"""

from ._core import (  # noqa: F401
    RNG_ALGORITHM,
    UentError,
    __version__,
    apply_gate,
    builtin_gates,
    column_filter,
    counterexample_search,
    entanglement_distribution,
    entanglement_entropy,
    gate,
    gate_matrix,
    haar_state,
    haar_unitary,
    is_separable,
    is_unitary,
    kappa_splits,
    kappa_state,
    load_gate_file,
    max_minor,
    min_entanglement,
    operator_residual,
    principal_sqrt,
    random_product_state,
    schmidt_coefficients,
    split_residual,
    state_residual,
    write_gate_file,
)

__all__ = [
    "RNG_ALGORITHM",
    "UentError",
    "__version__",
    "apply_gate",
    "builtin_gates",
    "column_filter",
    "counterexample_search",
    "entanglement_distribution",
    "entanglement_entropy",
    "gate",
    "gate_matrix",
    "haar_state",
    "haar_unitary",
    "is_separable",
    "is_unitary",
    "kappa_splits",
    "kappa_state",
    "load_gate_file",
    "max_minor",
    "min_entanglement",
    "operator_residual",
    "principal_sqrt",
    "random_product_state",
    "schmidt_coefficients",
    "split_residual",
    "state_residual",
    "write_gate_file",
]
