#!/usr/bin/env python3
"""
Refinement of an arbitrary quorum coloring of a tree into a cost-effective one with
at least as many classes.

Input classes are first split into their connected components. Vertices with
children are then processed level by level, top-down. A vertex v with more
same-class closed neighbors than it needs hands the lowest-indexed surplus children
S new classes (each child takes along its descendants of v's class). A child of S left
one short then absorbs its lowest-indexed grandchild w of another class, together
with the descendants of w that were in w's class.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .coloring import Coloring, canonicalize, is_cost_effective, split_classes, verify_quorum
from .config import get_config
from .exceptions import InternalInvariantViolation, NotAQuorumColoringError
from .tree_core import RootedTree

logger = logging.getLogger(__name__)


@dataclass
class RefineStep:
    vertex: int
    position: Tuple[int, int]
    surplus: List[int]
    repairs: List[Tuple[int, int]]
    classes_before: int
    classes_after: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertex': self.vertex,
            'position': list(self.position),
            'surplus': self.surplus,
            'repairs': [list(pair) for pair in self.repairs],
            'classes_before': self.classes_before,
            'classes_after': self.classes_after,
        }


@dataclass
class RefineTrace:
    initial_classes: int
    final_classes: int = 0
    steps: List[RefineStep] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'initial_classes': self.initial_classes,
            'final_classes': self.final_classes,
            'steps': [step.to_dict() for step in self.steps],
        }


class _Refinement:
    """Mutable state of one refinement run"""

    def __init__(self, tree: RootedTree, coloring: Coloring):
        self.tree = tree
        self.label = list(coloring.class_of)
        self.sizes = Counter(self.label)
        self.next_label = coloring.k
        self.touched: List[int] = []

    @property
    def class_count(self) -> int:
        return len(self.sizes)

    def need(self, v: int) -> int:
        return (self.tree.degree(v) + 2) // 2

    def same_count(self, v: int) -> int:
        label = self.label
        c = label[v]
        p = self.tree.parent[v]
        same = 1 + sum(1 for u in self.tree.children[v] if label[u] == c)
        if p is not None and label[p] == c:
            same += 1
        return same

    def recolor(self, x: int, new: int) -> None:
        """Give x the class new, along with every descendant of x in x's current class"""
        label = self.label
        children = self.tree.children
        old = label[x]
        moved = [x]
        stack = [x]
        while stack:
            u = stack.pop()
            for c in children[u]:
                if label[c] == old:
                    moved.append(c)
                    stack.append(c)
        for u in moved:
            self.label[u] = new
        self.sizes[old] -= len(moved)
        if not self.sizes[old]:
            del self.sizes[old]
        self.sizes[new] += len(moved)
        self.touched.extend(moved)

    def short_near(self, vertices: Iterable[int]) -> List[int]:
        """Vertices of the closed neighborhoods of `vertices` that miss their quorum"""
        tree = self.tree
        around = set()
        for u in vertices:
            around.add(u)
            around.update(tree.children[u])
            if tree.parent[u] is not None:
                around.add(tree.parent[u])
        return sorted(v for v in around if self.same_count(v) < self.need(v))

    def fresh_label(self) -> int:
        new = self.next_label
        self.next_label += 1
        return new


def algo1_refine(
    tree: RootedTree,
    coloring: Coloring,
    validate_each_iteration: Optional[bool] = None,
) -> Tuple[Coloring, RefineTrace]:
    """
    Turn a quorum coloring of any tree into a better one: cost-effective, and with at
    least as many classes.

    Raises:
        NotAQuorumColoringError: the input is not a quorum coloring
        InternalInvariantViolation: a step broke validity (the trace is attached)
    """
    graph = tree.to_graph()
    report = verify_quorum(graph, coloring)
    if not report.valid:
        raise NotAQuorumColoringError(
            f"Input is not a quorum coloring: {'; '.join(report.violation_lines()[:5])}"
        )
    if validate_each_iteration is None:
        validate_each_iteration = get_config().validate_each_iteration

    # same-class neighbors share a component, so the split stays a quorum coloring
    components = split_classes(graph, coloring)
    if components.k > coloring.k:
        logger.debug(f"Split {coloring.k} input classes into {components.k} connected classes")
    state = _Refinement(tree, components)
    trace = RefineTrace(initial_classes=coloring.k)
    positions = tree.positions()
    children = tree.children

    for level in tree.levels[:-1]:
        for v in level:
            kids = children[v]
            if not kids:
                continue
            surplus = state.same_count(v) - state.need(v)
            if surplus <= 0:
                continue

            before = state.class_count
            state.touched = []
            c = state.label[v]
            chosen = [u for u in kids if state.label[u] == c][:surplus]
            for s in chosen:
                state.recolor(s, state.fresh_label())

            repairs = []
            for s in chosen:
                if state.same_count(s) >= state.need(s):
                    continue
                own = state.label[s]
                candidates = [w for w in children[s] if state.label[w] != own]
                if not candidates:
                    trace.steps.append(
                        RefineStep(v, positions[v], chosen, repairs, before, state.class_count)
                    )
                    raise InternalInvariantViolation(
                        f"Vertex {s} is short of its quorum but has no grandchild to absorb",
                        trace,
                    )
                w = candidates[0]
                state.recolor(w, own)
                repairs.append((s, w))

            step = RefineStep(v, positions[v], chosen, repairs, before, state.class_count)
            trace.steps.append(step)
            logger.debug(
                f"Refined v_{positions[v]}: |S|={len(chosen)}, repairs={len(repairs)}, "
                f"classes {before} -> {state.class_count}"
            )
            if step.classes_after < step.classes_before:
                raise InternalInvariantViolation(
                    f"Class count dropped at vertex {v}", trace
                )
            if validate_each_iteration:
                short = state.short_near(state.touched)
                if short:
                    raise InternalInvariantViolation(
                        f"Coloring invalid at vertices {short[:10]} after processing vertex {v}",
                        trace,
                    )

    result = canonicalize(state.label)
    final = verify_quorum(graph, result)
    if not final.valid:
        raise InternalInvariantViolation(
            f"Refined coloring invalid at vertices {list(final.violations[:10])}", trace
        )
    if not is_cost_effective(graph, result):
        raise InternalInvariantViolation("Refined coloring is not cost-effective", trace)
    trace.final_classes = result.k
    logger.info(f"Refinement: {trace.initial_classes} -> {trace.final_classes} classes")
    return result, trace
