"""Constructive path decompositions of graphs and Cartesian products.

Tight decompositions of trees, grids and products with a path factor, a
product composition driven by a tight decomposition of one factor, an exact
branch-and-bound oracle for ``p(G)``, and a strict verifier.
"""

from .balanced import BalancedDecomposition, LinkingStructure, balanced_decomposition, linking_structure
from .decomposition import (
    Decomposition,
    PathClass,
    VerifyReport,
    classify_path,
    from_json,
    lower_bound,
    to_json,
    verify,
)
from .graph import (
    DegreeProfile,
    Graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    degree_profile,
    format_edge_list,
    gen_family,
    is_connected,
    grid_graph,
    make_graph,
    parse_edge_list,
    path_graph,
    star_graph,
    subdivide,
)
from .dot import to_dot
from .layered import decompose_grid, decompose_path_even_product, decompose_path_product
from .oracle import OracleBudget, OracleResult, decompose_odd_graph, min_path_decomposition
from .products import (
    RealAssignment,
    VirtualRealPath,
    assign_virtual_real,
    decompose_path_tree_product,
    decompose_product,
    expand_subdivision,
)
from .trees import decompose_tree

__version__ = "0.1.0"
