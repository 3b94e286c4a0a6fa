"""Exact verification of set-theoretic complete intersection claims for barred-matrix ideals."""

from .errors import (BudgetExceeded, CapExceeded, ContextError, DomainError, ParseError, StciError,
                     ValidationError)
from .groebner import (GroebnerBasis, IdealGens, buchberger, certify_radical_equal, ideal_contains,
                       ideal_power_contained, min_power_in_ideal, normal_form, radical_contains, radical_equal)
from .monomial_curve import Binomial, MonomialParametrization, binomial_in_toric, homogeneity_check
from .polyring import DEGREVLEX, LEX, QQ, FieldSpec, MonomialOrder, PolyRing, Polynomial, VariableSet
from .report import VerificationReport
from .schmitt_vogel import SVSystem, build_sums, check_radical_claim, verify_conditions
from .scroll import (BarredMatrix, BigBlock, SmallBlock, corner_sums, ideal_J, scroll_F, stci_system,
                     sv_partition, validate)
from .varieties import PointSet, enumerate_points, same_vanishing_set

__version__ = "0.1.0"

__all__ = [
    "BarredMatrix", "BigBlock", "Binomial", "BudgetExceeded", "CapExceeded", "ContextError", "DEGREVLEX",
    "DomainError", "FieldSpec", "GroebnerBasis", "IdealGens", "LEX", "MonomialOrder", "MonomialParametrization",
    "ParseError", "PointSet", "PolyRing", "Polynomial", "QQ", "SVSystem", "SmallBlock", "StciError",
    "ValidationError", "VariableSet", "VerificationReport", "binomial_in_toric", "buchberger", "build_sums",
    "certify_radical_equal", "check_radical_claim", "corner_sums", "enumerate_points", "homogeneity_check",
    "ideal_J", "ideal_contains", "ideal_power_contained", "min_power_in_ideal", "normal_form",
    "radical_contains", "radical_equal", "same_vanishing_set", "scroll_F", "stci_system", "sv_partition",
    "validate", "verify_conditions",
]
