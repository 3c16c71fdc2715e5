"""Exact general position numbers, strong resolving graphs and graph products."""
from .errors import GenposError
from .families import (
    TreeTSpec,
    canonical_form,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    enumerate_connected_graphs,
    from_spec,
    is_isomorphic,
    path,
    petersen,
    realization_gadget,
    rooted_clique_gadget,
    star,
    tree_T,
)
from .gp import (
    check_characterization,
    clique_number,
    enumerate_gp_sets,
    eta,
    gp_brute_force,
    gp_diameter2,
    gp_number,
    gp_set_inducing_sr_clique,
    independence_number,
    is_general_position_set,
    isometric_cover_bound,
)
from .graph import DistMatrix, Graph, bfs_all_pairs, diameter, interval, is_connected
from .io import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .products import (
    RootedSpec,
    corona,
    direct_product,
    generalized_lexicographic,
    lexicographic_product,
    rooted_product,
    strong_product,
)
from .resolving import is_maximally_distant, is_mmd, strong_resolving_graph

__all__ = [name for name in dir() if not name.startswith("_")]
