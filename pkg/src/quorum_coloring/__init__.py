#!/usr/bin/env python3
"""
Quorum Coloring - maximum quorum colorings of trees

Linear-time solving of perfect per-level trees, refinement of arbitrary quorum
colorings, matching bounds, exhaustive oracles and instance generators.
"""

__version__ = "1.0.0"

from .coloring import Coloring, Graph, QuorumReport, canonicalize, verify_quorum
from .core import QuorumAnalyzer
from .exceptions import QuorumError
from .refiner import algo1_refine
from .solver import algo2_solve, alpha_closed
from .tree_core import RootedTree, build_from_parent_array, classify_shape

__all__ = [
    "Coloring",
    "Graph",
    "QuorumAnalyzer",
    "QuorumError",
    "QuorumReport",
    "RootedTree",
    "algo1_refine",
    "algo2_solve",
    "alpha_closed",
    "build_from_parent_array",
    "canonicalize",
    "classify_shape",
    "verify_quorum",
]
