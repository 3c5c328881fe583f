"""Exact closed forms for weighted power sums over metallic sequences."""
from .closedform import (
    ClosedForm,
    IntegralityError,
    MetallicParams,
    MetallicSequence,
    VerificationReport,
    build_closed_form,
    check_induction_identities,
    closed_sum,
    metallic_terms,
    oracle_sum,
    verify_grid,
)
from .families import (
    FamilyCache,
    FamilyKind,
    TriangleTable,
    check_fequald,
    extend_cache,
    family_poly,
    triangle_rows,
)
from .patterns import PatternReport, check_patterns
from .polycore import (
    Polynomial,
    bar,
    binomial,
    check_trinomial_identity,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
    shift,
)

__version__ = "0.1.0"
