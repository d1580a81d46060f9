"""Exact operator algebra in x and p."""

from .coeff import CRational, Coefficient, I
from .metric import (
    VARIANTS,
    BCHResult,
    MetricDerivationError,
    bch_conjugate_truncated,
    build_class_hamiltonian,
    conjugate_by_exp,
    derive_metric,
    hermitian_closed_form,
    hermitian_equivalent,
    interaction_term,
    pseudo_hermiticity_residual,
    zero_mode_residual,
)
from .operators import (
    G,
    Monomial,
    OperatorPolynomial,
    P,
    X,
    XFunction,
    adjoint,
    commutator,
    normal_order_product,
    xfunction_commutator,
)

__all__ = [
    "BCHResult",
    "CRational",
    "Coefficient",
    "G",
    "I",
    "MetricDerivationError",
    "Monomial",
    "OperatorPolynomial",
    "P",
    "VARIANTS",
    "X",
    "XFunction",
    "adjoint",
    "bch_conjugate_truncated",
    "build_class_hamiltonian",
    "commutator",
    "conjugate_by_exp",
    "derive_metric",
    "hermitian_closed_form",
    "hermitian_equivalent",
    "interaction_term",
    "normal_order_product",
    "pseudo_hermiticity_residual",
    "xfunction_commutator",
    "zero_mode_residual",
]
