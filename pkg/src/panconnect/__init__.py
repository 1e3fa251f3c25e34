"""Johnson graphs, Boolean-lattice layer graphs, and exhaustive structural verification."""

__version__ = "0.1.0"

from .subsets import (
    SubsetWord,
    complement,
    enumerate_k_subsets,
    from_elements,
    from_text,
    intersect_size,
    rank,
    symm_diff_size,
    to_text,
    unrank,
)
from .graphs import (
    Graph,
    GraphMeta,
    bfs_distances,
    build_johnson,
    build_layer_graph,
    degree_stats,
    format_edge_list,
    graph_from_edges,
    is_connected,
    parse_edge_list,
    read_edge_list,
    square,
    write_edge_list,
)
from .morphisms import (
    Bijection,
    LayerSwap,
    Permutation,
    adjacent_transpositions,
    apply_permutation,
    certify_bijection,
    check_edge_transitive,
    check_vertex_transitive,
    complement_isomorphism,
    edge_orbit,
    layer_square_isomorphism,
    orbit_partition,
    vertex_orbit,
)
from .connectivity import (
    is_k_connected,
    local_connectivity,
    minimum_separator,
    vertex_connectivity,
    vertex_connectivity_witness,
)
from .pansearch import (
    CycleWitness,
    PathWitness,
    find_cycle_of_length,
    find_path_of_length,
    validate_cycle_witness,
    validate_path_witness,
    verify_hamilton_connected,
    verify_panconnected,
    verify_panconnected_symmetry_reduced,
    verify_pancyclic,
)
