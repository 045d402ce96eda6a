"""Exact optimisation over bipartite tree decompositions.

The main entry points are :func:`run_dp` with one of the problem plugins,
:func:`solve_packing_xp` for pattern packings, and the validators and
constructions in :mod:`biptw.decomposition`.
"""

from .decomposition import (RootedDecomposition, coloring_from_decomposition, from_oct,
                            from_tree_decomposition, normalize, push_odd_minor, validate)
from .dp import AnnotatedPartition, extract_certificate, run_dp
from .graph import Graph
from .packing import enumerate_partial_copies, solve_packing_xp
from .problems import KtCover, MaxCut, OddCycleTransversal, VertexCover, make_plugin

__version__ = "0.1.0"

__all__ = [
    "AnnotatedPartition", "Graph", "KtCover", "MaxCut", "OddCycleTransversal",
    "RootedDecomposition", "VertexCover", "coloring_from_decomposition",
    "enumerate_partial_copies", "extract_certificate", "from_oct", "from_tree_decomposition",
    "make_plugin", "normalize", "push_odd_minor", "run_dp", "solve_packing_xp", "validate",
]
