"""Structural recognizers, slow-set witnesses and the conjecture check."""

from .conjectures import BOTH_RULES, conjecture_check
from .fast_join import fast_join_verdict, is_psd_fast_join, is_standard_fast_join
from .patterns import (
    COMPONENT_OBSTRUCTIONS,
    JOIN_OBSTRUCTIONS,
    PATTERN_EDGES,
    forbidden_subgraph_scan,
    independent_triple_slow_set,
    is_cograph,
    join_pattern_slow_set,
    star_complement_slow_set,
)
from .shapes import (
    classify_component_shape,
    complement_components,
    complement_shapes,
    is_join,
    shape_of_component,
)
from .structure import (
    dominated_pair_slow_witness,
    independence_number,
    leaves,
    twins,
    universal_vertices,
    z_at_least_n_minus_2_form,
)
from .threshold import is_threshold, threshold_construction_tree

__all__ = [
    "BOTH_RULES",
    "COMPONENT_OBSTRUCTIONS",
    "JOIN_OBSTRUCTIONS",
    "PATTERN_EDGES",
    "classify_component_shape",
    "complement_components",
    "complement_shapes",
    "conjecture_check",
    "dominated_pair_slow_witness",
    "fast_join_verdict",
    "forbidden_subgraph_scan",
    "independence_number",
    "independent_triple_slow_set",
    "is_cograph",
    "is_join",
    "is_psd_fast_join",
    "is_standard_fast_join",
    "is_threshold",
    "join_pattern_slow_set",
    "leaves",
    "shape_of_component",
    "star_complement_slow_set",
    "threshold_construction_tree",
    "twins",
    "universal_vertices",
    "z_at_least_n_minus_2_form",
]
