#!/usr/bin/env python3
"""
Exact ψ_q methods and their applicability

select_exact_method() walks the methods from most to least specific: the closed form
for perfect binary trees, the matching formula for trees of maximum degree 3, then the
linear-time solver for perfect per-level trees.
"""

from abc import ABC, abstractmethod
from typing import List, Optional

from .bounds import closed_form_perfect_binary, exact_binary
from .solver import algo2_solve
from .tree_core import RootedTree, ShapeClass, classify_shape


class ExactMethod(ABC):
    """Abstract base class for exact ψ_q methods"""

    name = ''

    @abstractmethod
    def applies(self, tree: RootedTree, shape: Optional[ShapeClass] = None) -> bool:
        """Whether the method is exact on this tree"""
        pass

    @abstractmethod
    def solve(self, tree: RootedTree) -> int:
        """Compute ψ_q(T)"""
        pass


class ClosedFormMethod(ExactMethod):
    name = 'closed_form'

    def applies(self, tree: RootedTree, shape: Optional[ShapeClass] = None) -> bool:
        shape = shape or classify_shape(tree)
        return shape.arity == 2

    def solve(self, tree: RootedTree) -> int:
        return closed_form_perfect_binary(tree.height)


class BinaryExactMethod(ExactMethod):
    name = 'corollary2_binary'

    def applies(self, tree: RootedTree, shape: Optional[ShapeClass] = None) -> bool:
        return tree.n >= 2 and tree.max_degree <= 3

    def solve(self, tree: RootedTree) -> int:
        return exact_binary(tree)


class PerLevelMethod(ExactMethod):
    name = 'algo2'

    def applies(self, tree: RootedTree, shape: Optional[ShapeClass] = None) -> bool:
        shape = shape or classify_shape(tree)
        return shape.is_per_level

    def solve(self, tree: RootedTree) -> int:
        return algo2_solve(tree)[1].total


EXACT_METHODS: List[ExactMethod] = [ClosedFormMethod(), BinaryExactMethod(), PerLevelMethod()]


def select_exact_method(tree: RootedTree) -> Optional[ExactMethod]:
    """First applicable exact method, or None when only bounds and brute force remain"""
    shape = classify_shape(tree)
    for method in EXACT_METHODS:
        if method.applies(tree, shape):
            return method
    return None
