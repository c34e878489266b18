"""Exact verification of exceptional-collection criteria on quiver moduli."""

from .betti import PoincarePolynomial, hochschild_zero, picard_rank, poincare_polynomial
from .bundles import OH, BundleExpression, Lin, U, Udual, canonical_bundle, parse_bundle, serre_partner, structure_sheaf
from .core import (
    AssumptionError,
    Moduli,
    Quiver,
    QuiverError,
    canonical_stability,
    check_assumptions,
    default_linearisation,
    euler_form,
    fano_index,
    moduli_dimension,
)
from .hn import HNType, generic_subdimension_vectors, has_semistable, hn_types
from .sod import (
    Answer,
    Questions,
    Status,
    VanishingVerdict,
    mkronecker_h0_condition,
    question_a,
    question_b,
    question_c,
    theorem_d_verdict,
    vanishing_verdict,
)
from .teleman import t_star, teleman_report, theorem_d_criterion

__version__ = "0.1.0"
