"""Exact symbolic engine for the double-graded quantum superplane.

Coordinates carry degrees in Z2 x Z2 and exchange at the cost of a power of
q times a Koszul sign; everything downstream (normal forms, the Hopf
structure on the extended plane, the bicovariant calculus and the partial
derivative operators) is computed exactly over Q[q, q^-1] and verified
mechanically against the defining relations.
"""

from .engine import (AlgebraPresentation, Element, PresentationError,
                     check_local_confluence, check_relation, convert,
                     homogeneous_degree, iter_monomials, normal_form)
from .grading import degree_add, koszul_sign, scalar_product
from .hopf import (antipode, coproduct, counit, hopf_verify,
                   primitive_bracket_check)
from .calculus import calculus_verify, coaction, de_rham
from .operators import apply_partial, operator_verify, pbw_action_oracle
from .parser import evaluate_text, parse_expression
from .presentations import BUILTIN_NAMES, load_presentation
from .scalars import ONE, Q, QINV, ZERO, QScalar, qpow
from .tensor import TensorElement, interchange, tensor
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation", "Element", "PresentationError", "QScalar",
    "TensorElement", "antipode", "apply_partial", "BUILTIN_NAMES",
    "calculus_verify", "check_local_confluence", "check_relation",
    "coaction", "convert", "coproduct", "counit", "de_rham", "degree_add",
    "evaluate_text", "homogeneous_degree", "hopf_verify", "interchange",
    "iter_monomials", "koszul_sign", "load_presentation", "normal_form",
    "operator_verify", "parse_expression", "pbw_action_oracle",
    "primitive_bracket_check", "qpow", "run_suite", "scalar_product",
    "tensor", "ONE", "Q", "QINV", "ZERO",
]
