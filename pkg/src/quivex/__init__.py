"""quivex: exact computations with framed representations of preprojective
algebras, their Hom/Ext complexes, stability, quotient invariants, the
reduce/extend induction, and Kac-Moody weight-multiplicity oracles."""

__version__ = "0.1.0"

from .quiver import (
    Arrow,
    DimVector,
    DoubledQuiver,
    Quiver,
    ZetaParam,
    ade_minimal_resolution_setup,
    cartan_matrix,
    cb_extend_dim,
    cb_transform,
    chi,
    d_of,
    dim_bigM,
    double,
    zeta_pair,
)
from .ratmat import RatMatrix, as_fraction
from .rep import (
    FramedRep,
    GradedEndo,
    cb_apply,
    conjugate,
    direct_sum,
    evaluate_path,
    is_flat,
    moment_map,
    sample_flat,
    sample_flat_crystal,
    simple_rep,
)
from .homext import (
    Complex3,
    build_complex,
    cohom_dim,
    euler_check,
    ext1_dim,
    ext1_reps,
    hom_basis,
    hom_dim,
    hom_ext_report,
)
from .stability import (
    GradedSubspace,
    StabilityResult,
    is_stable,
    max_invariant_in_kerJ,
    min_invariant_over_imI,
    stabilizer_trivial,
)
from .invariants import (
    a1_relations,
    an_xyz,
    cycle_traces,
    path_invariants,
    pi_fingerprint,
)
from .hecke import (
    ReductionResult,
    are_isomorphic,
    epsilon_i,
    ext_space_i,
    extend_i,
    recovery_classes,
    reduce_i,
)
from .kacmoody import (
    MultiplicitySession,
    RootSystemData,
    WeightSpec,
    h_eigenvalue,
    predicted_component_count,
    root_multiplicities,
    roots_for_quiver,
    weight_multiplicity,
)
from .bundles import ExampleBundle, get_bundle

__all__ = [
    "__version__",
    "Arrow",
    "Quiver",
    "DoubledQuiver",
    "DimVector",
    "ZetaParam",
    "RatMatrix",
    "FramedRep",
    "GradedEndo",
    "Complex3",
    "GradedSubspace",
    "StabilityResult",
    "ReductionResult",
    "RootSystemData",
    "WeightSpec",
    "MultiplicitySession",
    "ExampleBundle",
    "as_fraction",
    "double",
    "cartan_matrix",
    "dim_bigM",
    "d_of",
    "chi",
    "zeta_pair",
    "cb_transform",
    "cb_extend_dim",
    "ade_minimal_resolution_setup",
    "moment_map",
    "is_flat",
    "simple_rep",
    "direct_sum",
    "evaluate_path",
    "conjugate",
    "sample_flat",
    "sample_flat_crystal",
    "cb_apply",
    "build_complex",
    "hom_dim",
    "hom_basis",
    "ext1_dim",
    "ext1_reps",
    "cohom_dim",
    "euler_check",
    "hom_ext_report",
    "max_invariant_in_kerJ",
    "min_invariant_over_imI",
    "is_stable",
    "stabilizer_trivial",
    "cycle_traces",
    "path_invariants",
    "pi_fingerprint",
    "a1_relations",
    "an_xyz",
    "epsilon_i",
    "reduce_i",
    "ext_space_i",
    "extend_i",
    "recovery_classes",
    "are_isomorphic",
    "root_multiplicities",
    "roots_for_quiver",
    "weight_multiplicity",
    "h_eigenvalue",
    "predicted_component_count",
    "get_bundle",
]
