"""Graph construction, algebra and graph6 interchange."""

from .algebra import (
    complement,
    component_masks,
    components,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_connected_within,
    join,
    join_all,
    relabel,
)
from .construction import (
    from_construction_tree,
    random_cograph_tree,
    random_psd_fast_join,
    random_standard_fast_join,
    random_threshold_tree,
)
from .generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    generate,
    path_graph,
    sgap_graph,
    sgap_parts,
    star_graph,
    wheel_graph,
)
from .graph6 import Graph6Error, from_graph6, iter_graph6_lines, load_graph6_path, to_graph6

__all__ = [
    "Graph6Error",
    "complement",
    "complete_bipartite_graph",
    "complete_graph",
    "component_masks",
    "components",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "from_construction_tree",
    "from_graph6",
    "generate",
    "induced_subgraph",
    "is_connected",
    "is_connected_within",
    "iter_graph6_lines",
    "join",
    "join_all",
    "load_graph6_path",
    "path_graph",
    "random_cograph_tree",
    "random_psd_fast_join",
    "random_standard_fast_join",
    "random_threshold_tree",
    "relabel",
    "sgap_graph",
    "sgap_parts",
    "star_graph",
    "to_graph6",
    "wheel_graph",
]
