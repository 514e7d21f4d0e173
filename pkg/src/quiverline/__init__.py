"""Path algebras of quivers labeled by divisors on the projective line.

The package computes with these algebras exactly (no floats anywhere):
bases of paths, graded Hom dimensions, localizations at points of the
line, projective resolutions of the point simples with certified
homological dimension, the weighted-line comparison, and stability of
weighted point configurations.
"""

from __future__ import annotations

from .errors import (
    ComposeError,
    DimError,
    InternalError,
    InvalidCycle,
    InvalidInput,
    InvalidPath,
    NonzeroCycleLabel,
    NotLocalized,
    NotReduced,
    NotTransverse,
    PreconditionError,
    QuiverlineError,
    SchemaError,
    SizeLimit,
    UnsupportedPresentation,
)
from .exactalg import (
    EffDivisor,
    HomForm,
    ProjPoint,
    Rat,
    divisor_add,
    divisor_from_mapping,
    divisor_section,
    divisor_to_mapping,
    form_add,
    form_eval,
    form_mul,
    form_restrict_finite,
    form_scale,
    form_vanishing_order,
    format_rat,
    h0_dim,
    h1_dim,
    is_reduced,
    parse_rat,
)
from .quiver import (
    Arrow,
    Path,
    Quiver,
    SimpleCycle,
    acyclic_paths,
    compose,
    contract_cycle,
    enumerate_simple_cycles,
    has_transverse_cycles,
    make_simple_cycle,
    path_source,
    path_target,
    rotate_cycle_to,
    validate_path,
)
from .path_algebra import (
    AlgebraElement,
    GradedIndex,
    LabeledQuiver,
    add,
    algebra_rank,
    arrow_element,
    contract_labeled,
    cycle_label,
    format_element,
    format_path,
    graded_hom_dim,
    hom_bundle,
    hom_paths,
    is_reduced_labeling,
    localize_at,
    localize_with_map,
    multiply,
    normal_form,
    path_element,
    path_label,
    require_transverse,
    scale,
    unit_element,
    zero_element,
)
from .homology import (
    AlgMatrix,
    CertificationReport,
    FreeComplex,
    PolyMatrix,
    ResolutionReport,
    alg_matrix,
    build_simple_resolution,
    certification_points,
    certify_hd,
    chart_poly,
    check_exactness,
    default_truncation_order,
    ext_dims,
    flatten_complex,
    flatten_matrix,
    local_smith_valuations,
    make_complex,
    membership,
    minimized_pd,
    module_basis,
    pd_simple,
    poly_kernel,
    resolve,
    truncated_rank,
    truncation_exactness,
    uniformizer_form,
)
from .orbifold import (
    ExcColReport,
    OrbifoldData,
    PicElement,
    QuiverWithRelations,
    build_ay,
    build_glq,
    dualizing_element,
    format_matrix_presentation,
    kqi_hom_dim,
    matrix_presentation,
    pic_add,
    pic_c,
    pic_leq,
    pic_normal_form,
    pic_sub,
    pic_x,
    pic_zero,
    s_dim,
    verify_exceptional_collection,
    window_objects,
)
from .stability import (
    collision_classes,
    is_generic,
    is_semistable,
    is_stable,
    stability_report,
)

__all__ = [
    "AlgMatrix",
    "Arrow",
    "AlgebraElement",
    "CertificationReport",
    "ComposeError",
    "DimError",
    "EffDivisor",
    "ExcColReport",
    "FreeComplex",
    "GradedIndex",
    "HomForm",
    "InternalError",
    "InvalidCycle",
    "InvalidInput",
    "InvalidPath",
    "LabeledQuiver",
    "NonzeroCycleLabel",
    "NotLocalized",
    "NotReduced",
    "NotTransverse",
    "OrbifoldData",
    "Path",
    "PicElement",
    "PolyMatrix",
    "PreconditionError",
    "ProjPoint",
    "Quiver",
    "QuiverWithRelations",
    "QuiverlineError",
    "Rat",
    "ResolutionReport",
    "SchemaError",
    "SimpleCycle",
    "SizeLimit",
    "UnsupportedPresentation",
    "acyclic_paths",
    "add",
    "alg_matrix",
    "algebra_rank",
    "arrow_element",
    "build_ay",
    "build_glq",
    "build_simple_resolution",
    "certification_points",
    "certify_hd",
    "chart_poly",
    "check_exactness",
    "collision_classes",
    "compose",
    "contract_cycle",
    "contract_labeled",
    "cycle_label",
    "default_truncation_order",
    "divisor_add",
    "divisor_from_mapping",
    "divisor_section",
    "divisor_to_mapping",
    "dualizing_element",
    "enumerate_simple_cycles",
    "ext_dims",
    "flatten_complex",
    "flatten_matrix",
    "form_add",
    "form_eval",
    "form_mul",
    "form_restrict_finite",
    "form_scale",
    "form_vanishing_order",
    "format_element",
    "format_matrix_presentation",
    "format_path",
    "format_rat",
    "graded_hom_dim",
    "h0_dim",
    "h1_dim",
    "has_transverse_cycles",
    "hom_bundle",
    "hom_paths",
    "is_generic",
    "is_reduced",
    "is_reduced_labeling",
    "is_semistable",
    "is_stable",
    "kqi_hom_dim",
    "local_smith_valuations",
    "localize_at",
    "localize_with_map",
    "make_complex",
    "make_simple_cycle",
    "matrix_presentation",
    "membership",
    "minimized_pd",
    "module_basis",
    "multiply",
    "normal_form",
    "parse_rat",
    "path_element",
    "path_label",
    "path_source",
    "path_target",
    "pd_simple",
    "pic_add",
    "pic_c",
    "pic_leq",
    "pic_normal_form",
    "pic_sub",
    "pic_x",
    "pic_zero",
    "poly_kernel",
    "require_transverse",
    "resolve",
    "rotate_cycle_to",
    "s_dim",
    "scale",
    "stability_report",
    "truncated_rank",
    "truncation_exactness",
    "uniformizer_form",
    "unit_element",
    "validate_path",
    "verify_exceptional_collection",
    "window_objects",
    "zero_element",
]
