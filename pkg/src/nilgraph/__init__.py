"""Two-step nilpotent groups built from finite simple graphs.

The package constructs, for a finite simple graph, the 2-step nilpotent
quotient of its right-angled Artin group, computes Reidemeister numbers
of automorphisms exactly, classifies Reidemeister spectra via graph
decompositions, and cross-checks everything against brute-force orbit
counts in finite quotients.
"""

from .exactlin import (
    INFINITY,
    DimensionError,
    ExtNat,
    IntMatrix,
    SmithForm,
    abs_inf,
    det,
    kernel_rank,
    kronecker,
    smith_normal_form,
    tensor_det_identity,
)
from .graphs import (
    ComponentDecomposition,
    Graph,
    JoinDecomposition,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_filtration,
    empty_graph,
    induced_subgraph,
    is_isomorphic,
    join_decompose,
    path_graph,
    simplicial_join,
)
from .nilgroup import (
    GroupElement,
    Presentation,
    center_rank,
    centralizer_hirsch,
    commutator,
    gamma2_rank,
    inverse,
    multiply,
)
from .morphism import (
    Endo,
    NotAutomorphism,
    ReidemeisterResult,
    RelationViolation,
    companion_automorphism,
    has_eigenvalue_one,
    induced_commutator_matrix,
    is_automorphism,
    make_endo,
    reidemeister_number,
)
from .spectra import (
    SpectrumReport,
    compute_spectrum_report,
    detect_r_infinity,
    enumerate_automorphisms,
    spectrum_by_decomposition,
    spectrum_membership,
)
from .oracle import FiniteQuotient, abelian_class_count, count_twisted_classes

__all__ = [
    "INFINITY",
    "DimensionError",
    "ExtNat",
    "IntMatrix",
    "SmithForm",
    "abs_inf",
    "det",
    "kernel_rank",
    "kronecker",
    "smith_normal_form",
    "tensor_det_identity",
    "ComponentDecomposition",
    "Graph",
    "JoinDecomposition",
    "complement",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "degree_filtration",
    "empty_graph",
    "induced_subgraph",
    "is_isomorphic",
    "join_decompose",
    "path_graph",
    "simplicial_join",
    "GroupElement",
    "Presentation",
    "center_rank",
    "centralizer_hirsch",
    "commutator",
    "gamma2_rank",
    "inverse",
    "multiply",
    "Endo",
    "NotAutomorphism",
    "ReidemeisterResult",
    "RelationViolation",
    "companion_automorphism",
    "has_eigenvalue_one",
    "induced_commutator_matrix",
    "is_automorphism",
    "make_endo",
    "reidemeister_number",
    "SpectrumReport",
    "compute_spectrum_report",
    "detect_r_infinity",
    "enumerate_automorphisms",
    "spectrum_by_decomposition",
    "spectrum_membership",
    "FiniteQuotient",
    "abelian_class_count",
    "count_twisted_classes",
]
