from ._combinatorics import binomial, colex_rank, colex_combinations, proper_subsets, nonempty_subsets
from ._kgraph import (KGraph, complete_graph, empty_graph, degree, degree_counts,
                      min_positive_degree, min_degree, shadow_size, induced,
                      adjacency_tensor, hom_count, hom_density, contains_subgraph,
                      is_family_free)
from ._labelled import LabelledKGraph, single_edge, rooted_product, edge_power, unlabel
from ._canonical import canonical_labelling, canonical_form, is_isomorphic
from ._io import (parse_graph, serialize_graph, parse_graphs, serialize_graphs,
                  read_graph, read_graphs, write_graph)
from ._symmetry import (SlotPermutations, slot_permutations, canonical_mask, copy_masks, mask_slots,
                        mask_key)

__all__ = ["KGraph", "complete_graph", "empty_graph",
           "degree", "degree_counts", "min_positive_degree", "min_degree", "shadow_size",
           "induced", "adjacency_tensor", "hom_count", "hom_density",
           "contains_subgraph", "is_family_free",
           "LabelledKGraph", "single_edge", "rooted_product", "edge_power", "unlabel",
           "canonical_labelling", "canonical_form", "is_isomorphic",
           "parse_graph", "serialize_graph", "parse_graphs", "serialize_graphs",
           "read_graph", "read_graphs", "write_graph",
           "SlotPermutations", "slot_permutations", "canonical_mask", "copy_masks", "mask_slots", "mask_key",
           "binomial", "colex_rank", "colex_combinations", "proper_subsets", "nonempty_subsets"]
