"""Cayley dihypergraphs over small finite groups.

The library builds dihypergraphs whose arcs are the right translates of an
identity-containing subset family, checks the structural facts that hold
for them (connectivity, undirectedness, translate closure), and recovers
group presentations from regular automorphism subgroups.
"""

from .groups import (
    AUT_GROUP_ORDER_CUTOFF,
    CutoffExceeded,
    FiniteGroup,
    GroupAutomorphism,
    direct_product,
    element_order,
    generating_set,
    group_automorphisms,
    inner_automorphisms,
    is_subgroup,
    load_group,
    make_cyclic,
    make_dihedral,
    serialize_group,
    subgroup_generated,
    subgroup_index,
)
from .hypersets import (
    CayleyHyperset,
    are_cayley_equivalent,
    aut_g_x,
    cayley_closure,
    cayley_equivalence_classes,
    inn_g_x,
    is_cayley_closed,
    load_hyperset,
    non_cayley_equivalent_representatives,
    right_translate,
    single_cayley_closure,
    validate_hyperset,
)
from .hypergraphs import (
    ISO_VERTEX_CUTOFF,
    Dihypergraph,
    UndirectedHypergraph,
    cd_construct,
    ch_construct,
    dump_dihypergraph,
    hypergraph_isomorphic,
    is_connected,
    is_undirected,
    load_dihypergraph,
    to_cayley_digraph,
    underlying,
    uniformity,
)
from .perms import (
    CLOSURE_CAP,
    CayleyRecovery,
    PermGroup,
    Permutation,
    Theorem2Report,
    aut_hypergraph,
    dump_permgroup,
    find_regular_subgroups,
    generate_closure,
    is_regular,
    normalizer,
    regular_to_cayley,
    right_regular,
    verify_theorem2,
)
from .census import CensusResult, census_corpus, census_hypersets, run_census
from .cli import AnalysisReport, build_analysis_report

__all__ = [
    "AUT_GROUP_ORDER_CUTOFF",
    "CLOSURE_CAP",
    "ISO_VERTEX_CUTOFF",
    "AnalysisReport",
    "CayleyHyperset",
    "CayleyRecovery",
    "CensusResult",
    "CutoffExceeded",
    "Dihypergraph",
    "FiniteGroup",
    "GroupAutomorphism",
    "PermGroup",
    "Permutation",
    "Theorem2Report",
    "UndirectedHypergraph",
    "are_cayley_equivalent",
    "aut_g_x",
    "aut_hypergraph",
    "build_analysis_report",
    "cayley_closure",
    "cayley_equivalence_classes",
    "cd_construct",
    "census_corpus",
    "census_hypersets",
    "ch_construct",
    "direct_product",
    "dump_dihypergraph",
    "dump_permgroup",
    "element_order",
    "find_regular_subgroups",
    "generate_closure",
    "generating_set",
    "group_automorphisms",
    "hypergraph_isomorphic",
    "inn_g_x",
    "inner_automorphisms",
    "is_cayley_closed",
    "is_connected",
    "is_regular",
    "is_subgroup",
    "is_undirected",
    "load_dihypergraph",
    "load_group",
    "load_hyperset",
    "make_cyclic",
    "make_dihedral",
    "non_cayley_equivalent_representatives",
    "normalizer",
    "regular_to_cayley",
    "right_regular",
    "right_translate",
    "run_census",
    "serialize_group",
    "single_cayley_closure",
    "subgroup_generated",
    "subgroup_index",
    "to_cayley_digraph",
    "underlying",
    "uniformity",
    "validate_hyperset",
    "verify_theorem2",
]
