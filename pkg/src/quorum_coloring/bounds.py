#!/usr/bin/env python3
"""
Matching-based values of ψ_q on trees

    bound_theorem1:  ψ_q(T) >= μ(T[V∖L]) + n - Σ_{v ∉ L} ⌊d(v)/2⌋
    exact_binary:    ψ_q(T)  = μ(T[V∖L]) + |L|         when Δ(T) <= 3
    closed form:     ψ_q     = (2^(h+2) - 2^(h mod 2)) / 3 for the perfect binary tree

L is the set of vertices of degree at most one.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from networkx.utils import UnionFind

from .coloring import Graph
from .config import get_config
from .exceptions import (
    ClosedFormOverflowError,
    NotAForestError,
    NotBinaryError,
    SemanticError,
    TrivialTreeError,
)
from .tree_core import RootedTree, internal_forest

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edges, each as (u, v) with u < v"""

    edges: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def mapped(self, origin: Optional[Tuple[int, ...]]) -> 'Matching':
        """The same matching in the parent graph's indices"""
        if origin is None:
            return self
        pairs = (tuple(sorted((origin[u], origin[v]))) for u, v in self.edges)
        return Matching(edges=tuple(sorted(pairs)))

    def to_dict(self) -> Dict[str, Any]:
        return {'size': self.size, 'edges': [list(e) for e in self.edges]}


def matching_number_forest(forest: Graph) -> Matching:
    """
    Maximum matching of a forest by leaf elimination: match a leaf to its only
    neighbor, delete both, repeat.

    Raises:
        NotAForestError: the graph has a cycle
    """
    uf = UnionFind(range(forest.n))
    for u, v in forest.edges():
        if uf[u] == uf[v]:
            raise NotAForestError(f"Edge ({u}, {v}) closes a cycle")
        uf.union(u, v)

    adjacency = forest.adjacency
    degree = list(forest.degree)
    removed = [False] * forest.n
    queue = deque(v for v in range(forest.n) if degree[v] == 1)
    edges: List[Tuple[int, int]] = []

    while queue:
        u = queue.popleft()
        if removed[u] or degree[u] != 1:
            continue
        w = next(x for x in adjacency[u] if not removed[x])
        edges.append((u, w) if u < w else (w, u))
        removed[u] = removed[w] = True
        for x in adjacency[w]:
            if not removed[x]:
                degree[x] -= 1
                if degree[x] == 1:
                    queue.append(x)

    return Matching(edges=tuple(sorted(edges)))


def _require_nontrivial(tree: RootedTree) -> None:
    if tree.n < 2:
        raise TrivialTreeError(f"Tree must have at least 2 vertices, got {tree.n}")


def bound_theorem1(tree: RootedTree) -> int:
    """Lower bound on ψ_q(T) from the matching number of the internal forest"""
    _require_nontrivial(tree)
    mu = matching_number_forest(internal_forest(tree)).size
    penalty = sum(d // 2 for d in tree.degrees() if d >= 2)
    value = mu + tree.n - penalty
    logger.debug(f"Bound: mu={mu}, n={tree.n}, penalty={penalty}, value={value}")
    return value


def exact_binary(tree: RootedTree) -> int:
    """ψ_q of a tree with maximum degree at most 3"""
    _require_nontrivial(tree)
    if tree.max_degree > 3:
        raise NotBinaryError(f"Maximum degree is {tree.max_degree}, expected at most 3")
    mu = matching_number_forest(internal_forest(tree)).size
    return mu + len(tree.leaves())


def closed_form_perfect_binary(h: int, max_height: Optional[int] = None) -> int:
    if h < 0:
        raise SemanticError(f"Height must be non-negative, got {h}")
    if max_height is None:
        max_height = get_config().max_closed_form_height
    if h > max_height:
        raise ClosedFormOverflowError(
            f"Height {h} exceeds the supported maximum {max_height}"
        )
    if h == 0:
        return 1
    return ((1 << (h + 2)) - (1 << (h % 2))) // 3


def psi_q_forest(components: Iterable[int]) -> int:
    """ψ_q of a disjoint union, given ψ_q of each component"""
    return sum(components)
