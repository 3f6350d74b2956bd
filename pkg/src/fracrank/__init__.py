"""fracrank: orthogonal subspace representations, fit matrices, and
fractional rank parameters of graphs."""

from .graphs import (
    Graph,
    GraphFormatError,
    clique_sum,
    complement,
    connected_components,
    cut_vertex_components,
    disjoint_union,
    generate,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_connected,
    parse_graph,
    parse_graph6,
    parse_graph_json,
    to_graph6,
    union,
)
from .invariants import (
    ChordalityReport,
    Coloring,
    Rational,
    alpha,
    b_fold_coloring,
    chi,
    chi_b,
    chi_f,
    chi_with_coloring,
    is_chordal,
    max_clique,
    max_independent_set,
    maximal_independent_sets,
    omega,
)
from .linalg import (
    DEFAULT_TOL,
    Subspace,
    Tolerances,
    align_to_standard,
    as_cmatrix,
    basis_from_projector,
    direct_sum,
    frobenius,
    gram,
    is_hermitian,
    is_psd,
    matrix_from_json,
    matrix_to_json,
    orthonormalize,
    projector_from_basis,
    psd_factor,
    rank,
    subspaces_orthogonal,
)
from .representations import (
    FoldedFaithfulRepresentation,
    ProjectiveRepresentation,
    SubspaceRepresentation,
    VerificationReport,
    Violation,
    canonical_faithful_rep,
    choose_k,
    coloring_to_osr,
    combine_fold,
    faithful_from_pair,
    fixture_p4_fosr,
    fixture_p4_osr,
    glue_clique_sum,
    osr_to_projective,
    pad_disjoint_union,
    projective_to_osr,
    rep_from_json,
    rep_to_json,
    stack_union,
    standardize_clique,
    verify,
    verify_faithful_projective,
    verify_fosr,
    verify_osr,
    verify_projective,
)
from .fitmatrices import (
    BetaSearchExhausted,
    BlockScaling,
    FitMatrix,
    block_scaling_of,
    direct_sum_fits,
    fit_from_json,
    fit_to_fosr,
    fit_to_json,
    fosr_to_fit,
    normalize_weak_fit,
    r_fits,
    union_combine,
    weakly_r_fits,
)
from .parameters import (
    BoundReport,
    CutVertexReport,
    DualityReport,
    RatioEntry,
    RatioSequence,
    SearchBudget,
    cut_vertex_mr_plus,
    duality_report,
    heuristic_fit_search,
    heuristic_osr_search,
    mr_f_estimate,
    mrr_bounds,
    xi_f_estimate,
    xi_r_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
