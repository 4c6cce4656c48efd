"""Generic rigidity of graphs: rank criterion versus path-augmented tree decompositions."""

from .graph import (
    Augmentation,
    GraphFormatError,
    Multigraph,
    OrderedPath,
    augment,
    canonical_form,
    enumerate_paths,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .pinning import build_pinned_system, extract_tree_partition, pinned_invertible
from .rigidity import (
    Framework,
    Verdict,
    build_rigidity_matrix,
    find_self_stress,
    find_stress_circuit,
    generic_rank,
    random_generic_placement,
    rigidity_verdict,
)
from .search import double_banana, enumerate_graphs, laman_check, scan_corpus
from .theorem import Claim, compare_with_rank, path_augmentation_test, path_budget_check
from .treedecomp import decompose_into_spanning_trees, verify_decomposition

__version__ = "0.1.0"
