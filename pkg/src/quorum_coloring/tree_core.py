#!/usr/bin/env python3
"""
Rooted trees: construction from parent arrays, level decomposition and shape
classification (perfect N-ary, perfect per level, locally perfect, perfect, general).

Vertices within a level are kept in ascending index order; the j-th vertex of
level i in that order is v_{i,j}.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .coloring import Graph
from .exceptions import (
    CycleDetectedError,
    IndexOutOfRangeError,
    MultipleRootsError,
    NoRootError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootedTree:
    """Immutable rooted tree; children lists are in ascending index order"""

    n: int
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    depth: Tuple[int, ...]
    levels: Tuple[Tuple[int, ...], ...]

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    @property
    def level_sizes(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def degree(self, v: int) -> int:
        """Undirected degree d_T(v)"""
        return len(self.children[v]) + (0 if v == self.root else 1)

    def degrees(self) -> List[int]:
        root = self.root
        return [len(kids) + (0 if v == root else 1) for v, kids in enumerate(self.children)]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def leaves(self) -> List[int]:
        """Vertices of undirected degree at most one (a lone root counts)"""
        return [v for v, d in enumerate(self.degrees()) if d <= 1]

    def positions(self) -> List[Tuple[int, int]]:
        """(i, j) grid position of every vertex, j 1-based as in v_{i,j}"""
        pos: List[Tuple[int, int]] = [(0, 0)] * self.n
        for i, level in enumerate(self.levels):
            for j, v in enumerate(level, start=1):
                pos[v] = (i, j)
        return pos

    def edges(self) -> List[Tuple[int, int]]:
        """(parent, child) pairs in ascending child order"""
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def parent_array(self) -> List[Optional[int]]:
        return list(self.parent)

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges())

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'root': self.root, 'parents': list(self.parent)}


def _assemble(
    parent: Sequence[Optional[int]],
    children: Sequence[Sequence[int]],
    root: int,
    levels: Sequence[Sequence[int]],
) -> RootedTree:
    depth = [0] * len(parent)
    for i, level in enumerate(levels):
        for v in level:
            depth[v] = i
    return RootedTree(
        n=len(parent),
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(kids) for kids in children),
        depth=tuple(depth),
        levels=tuple(tuple(level) for level in levels),
    )


def build_from_parent_array(parents: Sequence[Optional[int]]) -> RootedTree:
    """
    Build a rooted tree from a parent array (None marks the root).

    Raises:
        NoRootError, MultipleRootsError, IndexOutOfRangeError, CycleDetectedError
    """
    n = len(parents)
    roots = [v for v, p in enumerate(parents) if p is None]
    if not roots:
        raise NoRootError(f"No root among {n} vertices")
    if len(roots) > 1:
        raise MultipleRootsError(f"Multiple roots: {roots[:10]}")
    root = roots[0]

    children: List[List[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parents):
        if p is None:
            continue
        if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < n:
            raise IndexOutOfRangeError(f"Parent of vertex {v} is {p!r}, expected 0..{n - 1}")
        if p == v:
            raise CycleDetectedError(f"Vertex {v} is its own parent")
        children[p].append(v)

    # breadth-first from the root; anything unreached sits on a parent cycle
    levels: List[List[int]] = []
    frontier = [root]
    reached = 0
    while frontier:
        frontier.sort()
        levels.append(frontier)
        reached += len(frontier)
        frontier = [c for v in frontier for c in children[v]]
    if reached != n:
        raise CycleDetectedError(
            f"Parent links contain a cycle: {n - reached} vertices unreachable from root {root}"
        )

    tree = _assemble(list(parents), children, root, levels)
    logger.debug(f"Built tree: n={tree.n}, h={tree.height}")
    return tree


class ShapeKind(str, Enum):
    PERFECT_NARY = 'perfect-nary'
    PERFECT_PER_LEVEL = 'perfect-per-level'
    LOCALLY_PERFECT = 'locally-perfect'
    PERFECT_ONLY = 'perfect-only'
    GENERAL = 'general'


@dataclass(frozen=True)
class ShapeClass:
    """Most specific shape class of a rooted tree"""

    kind: ShapeKind
    height: int
    # N_0..N_{h-1}, only for the per-level kinds
    counts: Optional[Tuple[int, ...]] = None

    @property
    def is_per_level(self) -> bool:
        return self.kind in (ShapeKind.PERFECT_NARY, ShapeKind.PERFECT_PER_LEVEL)

    @property
    def is_locally_perfect(self) -> bool:
        return self.is_per_level or self.kind == ShapeKind.LOCALLY_PERFECT

    @property
    def is_perfect(self) -> bool:
        return self.kind != ShapeKind.GENERAL

    @property
    def arity(self) -> Optional[int]:
        return self.counts[0] if self.kind == ShapeKind.PERFECT_NARY else None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'kind': self.kind.value, 'height': self.height}
        if self.counts is not None:
            data['counts'] = list(self.counts)
        return data


def classify_shape(tree: RootedTree) -> ShapeClass:
    h = tree.height
    children = tree.children

    if any(not children[v] and tree.depth[v] != h for v in range(tree.n)):
        return ShapeClass(ShapeKind.GENERAL, h)

    counts = []
    for level in tree.levels[:-1]:
        sizes = {len(children[v]) for v in level}
        if len(sizes) != 1:
            break
        counts.append(sizes.pop())
    else:
        if len(set(counts)) == 1 and counts[0] >= 2:
            return ShapeClass(ShapeKind.PERFECT_NARY, h, tuple(counts))
        return ShapeClass(ShapeKind.PERFECT_PER_LEVEL, h, tuple(counts))

    for kids in children:
        if len({len(children[c]) for c in kids}) > 1:
            return ShapeClass(ShapeKind.PERFECT_ONLY, h)
    return ShapeClass(ShapeKind.LOCALLY_PERFECT, h)


def internal_forest(tree: RootedTree) -> Graph:
    """Subgraph induced by the non-leaf vertices; Graph.origin maps back to tree indices"""
    degrees = tree.degrees()
    inner = [v for v in range(tree.n) if degrees[v] >= 2]
    index = {v: i for i, v in enumerate(inner)}
    edges = [
        (index[p], index[v])
        for p, v in tree.edges()
        if p in index and v in index
    ]
    return Graph.from_edges(len(inner), edges, origin=inner)
