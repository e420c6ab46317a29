"""Exact GRM index computation and extremal-tree verification on trees."""

__version__ = "0.1.0"

from .canonical import CanonicalCode, canonical_code, isomorphic
from .census_algebra import (
    FreeCensusVarsD3,
    FreeCensusVarsD4,
    grm2_census_d3,
    grm2_census_d4,
    optimal_census_catalog,
    solve_census_d3,
    solve_census_d4,
    theorem_bound,
)
from .enumeration import EnumSpec, count_trees, enumerate_trees
from .families import (
    FamilySpec,
    make_broom,
    make_path,
    make_spider,
    make_star,
    make_t_opt,
    make_tt_opt,
    predicted_census,
)
from .indices import (
    Rational,
    census_grm,
    closed_form,
    edge_weights,
    grm,
    m1,
    m2,
    parse_rational,
)
from .transforms import (
    TransformOutcome,
    normalize,
    pendant_removal_delta,
    transform1,
    transform2,
    transform3,
    transform4,
)
from .trees import (
    DegreeCensus,
    Tree,
    build_tree,
    census,
    format_edge_list,
    max_degree,
    parse_edge_list,
)
from .verify import (
    VerificationCell,
    VerificationReport,
    min_profile,
    verify,
    verify_sec4,
    verify_thm21,
    verify_thm32,
    verify_thm33,
)

__all__ = [
    "__version__",
    "CanonicalCode",
    "DegreeCensus",
    "EnumSpec",
    "FamilySpec",
    "FreeCensusVarsD3",
    "FreeCensusVarsD4",
    "Rational",
    "TransformOutcome",
    "Tree",
    "VerificationCell",
    "VerificationReport",
    "build_tree",
    "canonical_code",
    "census",
    "census_grm",
    "closed_form",
    "count_trees",
    "edge_weights",
    "enumerate_trees",
    "format_edge_list",
    "grm",
    "grm2_census_d3",
    "grm2_census_d4",
    "isomorphic",
    "m1",
    "m2",
    "make_broom",
    "make_path",
    "make_spider",
    "make_star",
    "make_t_opt",
    "make_tt_opt",
    "max_degree",
    "min_profile",
    "normalize",
    "optimal_census_catalog",
    "parse_edge_list",
    "parse_rational",
    "pendant_removal_delta",
    "predicted_census",
    "solve_census_d3",
    "solve_census_d4",
    "theorem_bound",
    "transform1",
    "transform2",
    "transform3",
    "transform4",
    "verify",
    "verify_sec4",
    "verify_thm21",
    "verify_thm32",
    "verify_thm33",
]
