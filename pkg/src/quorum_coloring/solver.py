#!/usr/bin/env python3
"""
Linear-time quorum coloring of perfect trees whose same-depth vertices share a degree.

The root keeps ⌊N_0/2⌋ children in its class and gives the other ⌈N_0/2⌉ new
classes. Every later internal vertex v at depth i keeps ⌈N_i/2⌉ - 1 children if it
shares its parent's class, ⌈N_i/2⌉ otherwise, and the remaining children get new
classes. Every internal vertex ends up tight, and the class count is ψ_q(T).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .coloring import Coloring, canonicalize, is_cost_effective
from .exceptions import EmptyTreeError, NotPerLevelError, SemanticError
from .tree_core import RootedTree, ShapeClass, classify_shape

logger = logging.getLogger(__name__)


@dataclass
class OperationCounter:
    """Elementary operations of one solver run, by category"""

    comparisons: int = 0
    assignments: int = 0
    alpha_updates: int = 0
    summations: int = 0

    @property
    def total(self) -> int:
        return self.comparisons + self.assignments + self.alpha_updates + self.summations

    def to_dict(self) -> Dict[str, int]:
        return {
            'comparisons': self.comparisons,
            'assignments': self.assignments,
            'alpha_updates': self.alpha_updates,
            'summations': self.summations,
            'total': self.total,
        }


@dataclass
class AlphaTrace:
    """
    New-class counts per internal vertex.

    values[i][j - 1] is the count contributed by v_{i,j} to depth i + 1 (the root's
    entry includes its own class). shared[i] is how many depth-i vertices share their
    parent's class (shared[0] is 0).
    """

    values: List[List[int]]
    total: int
    shared: List[int]
    ops: OperationCounter = field(default_factory=OperationCounter)

    def flat(self) -> List[int]:
        return [a for level in self.values for a in level]

    def recurrence_holds(self, counts: Sequence[int]) -> bool:
        if not counts:
            return self.total == 1
        if len(self.shared) < 2 or self.shared[1] != counts[0] // 2:
            return False
        ell = counts[0]
        for i in range(1, len(counts)):
            if self.shared[i + 1] != ell * ((counts[i] + 1) // 2) - self.shared[i]:
                return False
            ell *= counts[i]
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'alpha': self.total,
            'values': self.values,
            'shared': self.shared,
            'ops': self.ops.to_dict(),
        }


def _require_per_level(tree: RootedTree) -> ShapeClass:
    if tree is None or tree.n == 0:
        raise EmptyTreeError("Tree has no vertices")
    shape = classify_shape(tree)
    if not shape.is_per_level:
        raise NotPerLevelError(
            f"Tree is {shape.kind.value}; same-depth vertices must have equal child counts"
        )
    return shape


def algo2_solve(tree: RootedTree) -> Tuple[Coloring, AlphaTrace]:
    """
    Maximum quorum coloring of a perfect per-level tree in one pass over the vertices.

    Returns:
        The coloring (canonical class ids) and its AlphaTrace; trace.total == ψ_q(T).
    """
    _require_per_level(tree)
    n = tree.n
    children = tree.children
    parent = tree.parent
    ops = OperationCounter()

    color = [0] * n
    ops.assignments += 1
    if n == 1:
        ops.summations += 1
        trace = AlphaTrace(values=[], total=1, shared=[0], ops=ops)
        return Coloring(class_of=(0,), k=1), trace

    root_kids = children[tree.root]
    n0 = len(root_kids)
    keep = n0 // 2
    next_color = 1
    for c in root_kids[keep:]:
        color[c] = next_color
        next_color += 1
    ops.assignments += n0
    values: List[List[int]] = [[(n0 + 1) // 2 + 1]]
    shared = [0, keep]
    ops.alpha_updates += 1

    comparisons = 0
    alpha_updates = 0
    assignments = 0
    for level in tree.levels[1:-1]:
        level_values = []
        level_shared = 0
        for v in level:
            kids = children[v]
            count = len(kids)
            cv = color[v]
            comparisons += 1
            if cv == color[parent[v]]:
                keep = (count + 1) // 2 - 1
                alpha = count // 2 + 1
            else:
                keep = (count + 1) // 2
                alpha = count // 2
            for c in kids[:keep]:
                color[c] = cv
            for c in kids[keep:]:
                color[c] = next_color
                next_color += 1
            assignments += count
            alpha_updates += 1
            level_shared += keep
            level_values.append(alpha)
        values.append(level_values)
        shared.append(level_shared)
    ops.comparisons += comparisons
    ops.assignments += assignments
    ops.alpha_updates += alpha_updates

    total = 0
    for level_values in values:
        for alpha in level_values:
            total += alpha
        ops.summations += len(level_values)

    if total != next_color:
        raise SemanticError(f"Class count {next_color} disagrees with alpha {total}")

    coloring = canonicalize(color)
    trace = AlphaTrace(values=values, total=total, shared=shared, ops=ops)
    logger.info(f"Linear solver: n={n}, alpha={total}, ops={ops.total}")
    return coloring, trace


def alpha_closed(counts: Sequence[int]) -> int:
    """
    ψ_q of the per-level tree with child counts N_0..N_{h-1}, without building it.

    Level i + 1 receives ℓ_i·⌊N_i/2⌋ + s_i new classes, where s_i counts the depth-i
    vertices sharing their parent's class: s_1 = ⌊N_0/2⌋, s_{i+1} = ℓ_i·⌈N_i/2⌉ - s_i.
    """
    if not counts:
        return 1
    n0 = counts[0]
    total = (n0 + 1) // 2 + 1
    shared = n0 // 2
    ell = n0
    for count in counts[1:]:
        total += ell * (count // 2) + shared
        shared = ell * ((count + 1) // 2) - shared
        ell *= count
    return total


def alpha_trace_of(tree: RootedTree, coloring: Coloring) -> AlphaTrace:
    """Read the per-vertex new-class counts off a cost-effective coloring of a per-level tree"""
    shape = _require_per_level(tree)
    if not is_cost_effective(tree.to_graph(), coloring):
        raise SemanticError("Coloring is a quorum coloring but not cost-effective")
    if tree.n == 1:
        return AlphaTrace(values=[], total=1, shared=[0])

    class_of = coloring.class_of
    counts = shape.counts or ()
    values = [[(counts[0] + 1) // 2 + 1]]
    shared = [0, sum(1 for c in tree.children[tree.root] if class_of[c] == class_of[tree.root])]
    for i, level in enumerate(tree.levels[1:-1], start=1):
        level_values = []
        level_shared = 0
        for v in level:
            same = class_of[v] == class_of[tree.parent[v]]
            level_values.append(counts[i] // 2 + (1 if same else 0))
            level_shared += sum(1 for c in tree.children[v] if class_of[c] == class_of[v])
        values.append(level_values)
        shared.append(level_shared)
    return AlphaTrace(values=values, total=sum(map(sum, values)), shared=shared)
