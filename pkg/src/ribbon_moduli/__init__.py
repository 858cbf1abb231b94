"""Moduli bookkeeping for rank-1 sheaves on ribbon curves.

Discrete invariants and stability live in `core` and `stability`,
strata/components/degeneration graphs in `geometry`, and the exact
verification engine over F_p[s, eps]/(eps^2) in `gfpoly`, `epsilon`,
`deformations` and `extcomplex`.  The `cli` module exposes everything
as deterministic JSON reports.
"""

from .core import (
    GLBDescriptor,
    GLBInvariants,
    NonPositiveIndex,
    ParityViolation,
    RibbonInvariants,
    UNKNOWN,
    VBDescriptor,
    glb_invariants,
    hilbert_poly,
    jacobian_dim,
    mk_glb,
    mk_ribbon,
    mk_vb,
)
from .deformations import Check, VerifyReport, verify_deformation_I, verify_deformation_II
from .epsilon import (
    EpsIdeal,
    EpsPoly,
    RankDeficient,
    ZeroIdeal,
    ideal_colength,
    ideal_equals,
    ideal_from_generators,
    ideal_intersect,
    ideal_scale,
    local_index_at,
)
from .extcomplex import NotStabilized, TruncatedComplex, endo_quotient_dim, ext1_dim
from .geometry import (
    ComponentTable,
    Smoothness,
    StratGraph,
    Stratum,
    TangentRange,
    VBStatus,
    component_table,
    enumerate_strata,
    graph_to_dot,
    smoothness_verdict,
    specialization_edges,
    stratification_graph,
    tangent_dim_glb,
    tangent_dim_vb,
)
from .gfpoly import Poly
from .stability import (
    GrClass,
    SelfClass,
    SplitClass,
    StabilityVerdict,
    classify_glb,
    classify_vb,
    gr_class,
    slopes,
)

__version__ = "0.1.0"

__all__ = [
    "Check",
    "ComponentTable",
    "EpsIdeal",
    "EpsPoly",
    "GLBDescriptor",
    "GLBInvariants",
    "GrClass",
    "NonPositiveIndex",
    "NotStabilized",
    "ParityViolation",
    "Poly",
    "RankDeficient",
    "RibbonInvariants",
    "SelfClass",
    "Smoothness",
    "SplitClass",
    "StabilityVerdict",
    "StratGraph",
    "Stratum",
    "TangentRange",
    "TruncatedComplex",
    "UNKNOWN",
    "VBDescriptor",
    "VBStatus",
    "VerifyReport",
    "ZeroIdeal",
    "classify_glb",
    "classify_vb",
    "component_table",
    "endo_quotient_dim",
    "enumerate_strata",
    "ext1_dim",
    "glb_invariants",
    "gr_class",
    "graph_to_dot",
    "hilbert_poly",
    "ideal_colength",
    "ideal_equals",
    "ideal_from_generators",
    "ideal_intersect",
    "ideal_scale",
    "jacobian_dim",
    "local_index_at",
    "mk_glb",
    "mk_ribbon",
    "mk_vb",
    "slopes",
    "smoothness_verdict",
    "specialization_edges",
    "stratification_graph",
    "tangent_dim_glb",
    "tangent_dim_vb",
    "verify_deformation_I",
    "verify_deformation_II",
]
