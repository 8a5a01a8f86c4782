"""Chern-Simons / Burns-Epstein invariants of U(2,1)-cover representations.

The package models the universal cover of U(2,1) concretely, provides
the four normal-form families of flat torus connections with their
developing maps, evaluates Chern-Simons variation formulas along
parameter paths (closed form vs quadrature), computes the exact
rational invariants of diagonal representations of Seifert homology
sphere groups, and searches numerically for representations realizing
prescribed elliptic conjugacy classes.
"""

from .normal_forms import (
    EllipticNF,
    LoxodromicNF,
    NormalFormConnection,
    ParabolicC1NF,
    ParabolicC2NF,
    connection_coeffs,
    developing_map,
    family_tag,
    holonomy,
)
from .repfinder import (
    ClassTarget,
    SearchResult,
    SnapFailure,
    extract_lift_data,
    find_representation,
    implied_angles,
    relation_residual,
    sigma_2_3_11_targets,
    target_from_angles,
)
from .seifert import (
    CentralAngles,
    GeneratorAngles,
    InvalidRepData,
    LengthMismatch,
    LiftedRepData,
    NotCoprime,
    SeifertPresentation,
    TableCase,
    Unliftable,
    burns_epstein,
    canonical_lift_data,
    cs_closed,
    cs_pipeline,
    make_random_rep,
    presentation,
    sigma_2_3_11_fixture,
    solve_b,
    validate_rep,
)
from .ug21 import (
    TOL_ANGLE,
    TOL_CLASSIFY,
    TOL_GROUP,
    CorrectionBranchError,
    DegenerateSpectrum,
    GElement,
    IsometryType,
    check_u21,
    classify,
    g_identity,
    g_inverse,
    g_multiply,
    g_project,
    is_reducible,
    lie_exp,
    lift_to_g,
    random_algebra_element,
    random_u21,
    u21_algebra_residual,
    wrap_angle,
)
from .variation import (
    ConnectionPath,
    FamilyMismatch,
    LinearParam,
    PolyParam,
    SampledParam,
    cs_delta_closed,
    cs_delta_quadrature,
    cs_integrand,
    gauge_shift_boundary_integral,
    gauge_shift_closed,
    mod_z,
    normal_form_from_params,
)

__version__ = "0.1.0"

__all__ = [
    "CentralAngles",
    "ClassTarget",
    "ConnectionPath",
    "CorrectionBranchError",
    "DegenerateSpectrum",
    "EllipticNF",
    "FamilyMismatch",
    "GElement",
    "GeneratorAngles",
    "InvalidRepData",
    "IsometryType",
    "LengthMismatch",
    "LiftedRepData",
    "LinearParam",
    "LoxodromicNF",
    "NormalFormConnection",
    "NotCoprime",
    "ParabolicC1NF",
    "ParabolicC2NF",
    "PolyParam",
    "SampledParam",
    "SearchResult",
    "SeifertPresentation",
    "SnapFailure",
    "TOL_ANGLE",
    "TOL_CLASSIFY",
    "TOL_GROUP",
    "TableCase",
    "Unliftable",
    "burns_epstein",
    "canonical_lift_data",
    "check_u21",
    "classify",
    "connection_coeffs",
    "cs_closed",
    "cs_delta_closed",
    "cs_delta_quadrature",
    "cs_integrand",
    "cs_pipeline",
    "developing_map",
    "extract_lift_data",
    "family_tag",
    "find_representation",
    "g_identity",
    "g_inverse",
    "g_multiply",
    "g_project",
    "gauge_shift_boundary_integral",
    "gauge_shift_closed",
    "holonomy",
    "implied_angles",
    "is_reducible",
    "lie_exp",
    "lift_to_g",
    "make_random_rep",
    "mod_z",
    "normal_form_from_params",
    "presentation",
    "random_algebra_element",
    "random_u21",
    "relation_residual",
    "sigma_2_3_11_fixture",
    "sigma_2_3_11_targets",
    "solve_b",
    "target_from_angles",
    "u21_algebra_residual",
    "validate_rep",
    "wrap_angle",
]
