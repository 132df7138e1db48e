"""Fault-tolerant supergraph analysis: automorphism groups, homogeneity of
group actions, k-fault-tolerant realization checks, and automorphic
reconfiguration."""

from ._core import (
    Graph,
    VertexSet,
    Permutation,
    PermGroup,
    AutomorphismGroupResult,
    Embedding,
    RealizationCheck,
    ReconfigPlan,
    SpectrumEntry,
    VerificationReport,
    Counterexample,
    SparePolicy,
    make_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    hypercube,
    complement,
    delete_vertices,
    induced_subgraph,
    degree_sequence,
    parse_graph6,
    emit_graph6,
    parse_edge_list,
    emit_edge_list,
    parse_cycles,
    format_cycles,
    compose,
    inverse,
    apply,
    parse_generator_file,
    emit_generator_file,
    orbit_of_point,
    orbit_of_subset,
    orbit_of_tuple,
    count_orbits_on_ksubsets,
    count_orbits_on_ktuples,
    is_k_homogeneous,
    is_k_transitive,
    orbit_count_monotonicity_check,
    automorphism_group,
    is_automorphism,
    max_homogeneity,
    contains_subgraph,
    contains_subgraph_after_faults,
    check_embedding,
    is_k_fault_tolerant_realization,
    build_global_sparing,
    find_reconfiguration,
    homogeneity_spectrum_report,
    enumerate_labeled_graphs,
    verify_theorem_3subsets,
    verify_main_theorem,
    verify_lemma_s7,
    verify_q3_example,
    verify_group_lemmas,
    corollary_checks,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
