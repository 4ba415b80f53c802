"""Orientations, break divisors and orientation posets on vertex-weighted
multigraphs.

The package enumerates stable graphs of a fixed genus, builds their
totally cyclic and rooted orientation posets, pushes orientations and
divisor classes along weighted edge contractions, and checks the whole
calculus exhaustively through the suites in :mod:`orposets.suites`.
"""

from .graphs import (
    Contraction,
    Graph,
    HatData,
    bridges,
    compose_contractions,
    connected_components,
    contract,
    contraction_from_json,
    contraction_to_json,
    cut_between,
    delete_edges,
    genus,
    graph_from_json,
    graph_to_json,
    identity_contraction,
    induced_subgraph,
    is_bridgeless,
    is_connected,
    is_stable,
    spanned_subgraph,
    subdivide,
    subset_genus,
)
from .divisors import (
    degree,
    hakimi_inequalities,
    hakimi_witness,
    hat_divisor,
    is_stable_divisor,
    partial_leq,
    restrict,
    sigma,
    stable_to_orientation,
    subset_degree,
)
from .orientations import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    Orientation,
    bioriented_edges,
    class_representative,
    divisor_of,
    enumerate_admissible,
    enumerate_orientations,
    equivalence_classes,
    extend_orientation,
    is_admissible,
    is_rooted,
    is_totally_cyclic,
    move_biorientation,
    orientation_from_json,
    orientation_to_json,
    restrict_orientation,
    rooted_orient,
    strong_orient,
)
from .posets import (
    FinitePoset,
    PosetError,
    build_A,
    build_OP,
    build_OPbar,
    build_poset,
    class_label,
    is_quotient_map,
    op_label,
    poset_to_dot,
    poset_to_json,
    quotient_by_equivalence,
    removal_family,
)
from .contractions import (
    collapse_choices,
    correction_divisor,
    hat_contraction,
    movable_representative,
    pull_edges,
    push_class,
    push_divisor,
    push_edges,
    push_orientation,
)
from .atlas import (
    GraphIso,
    automorphisms,
    build_Ag,
    build_OPg,
    build_Sg,
    canonical_graph,
    conjugacy_quotient,
    contraction_table,
    contractions_between,
    enumerate_stable_graphs,
    find_iso,
    is_stable_graph,
    isomorphic,
    isomorphisms,
    stable_graphs_slow,
    stratification_report,
)
from .suites import SUITE_IDS, SuiteReport, run_suite

__version__ = "0.1.0"
