"""Exact tests for freeness of semigroups generated by two maps under composition."""

from .classify import (
    Case,
    Classification,
    Verdict,
    classify_poly,
    classify_rational,
    classify_series,
    common_fixed_points,
    detect_chebyshev_conjugacy,
    detect_common_root,
    detect_monomial_conjugacy,
    monomial_pair_test,
)
from .errors import *  # noqa: F401,F403
from .field import (
    Cyclotomic,
    ExtensionRequest,
    FieldElement,
    FieldSpec,
    FiniteField,
    PrimeField,
    RadicalExtension,
    Rationals,
    extend,
    nth_root_or_request,
    parse_field_spec,
    root_of_unity_order,
)
from .parsing import parse_constant, parse_expression, parse_polynomial
from .poly import (
    LinearMap,
    Polynomial,
    X,
    chebyshev,
    compose,
    compositional_root,
    conjugate,
    gap_shift,
    is_gap_form,
    iterate,
    lcal,
    levi_match,
    scaling_symmetry,
)
from .rational import RationalFunction
from .semigroup import (
    Relation,
    case3_relation,
    eval_word,
    lemma33_params,
    lemma33_relation,
    search_relations,
    verify_relation,
)
from .series import (
    INFINITY,
    TruncatedSeries,
    boettcher,
    gap_stat,
    moebius_to_zero,
    reciprocal_conjugate,
    s_compose,
    s_invert,
)

__version__ = "0.1.0"
