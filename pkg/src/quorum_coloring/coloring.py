#!/usr/bin/env python3
"""
Coloring data model and validation

A coloring is a partition of the vertex set into classes. It is a quorum coloring
when every vertex v keeps at least half of its closed neighborhood N[v] in its own
class, i.e. |N[v] ∩ π(v)| >= ⌈|N[v]|/2⌉.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import NotAQuorumColoringError, SemanticError, SizeMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists"""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    # original vertex index of each vertex, when this graph is an induced subgraph
    origin: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        origin: Optional[Sequence[int]] = None,
    ) -> 'Graph':
        if n < 0:
            raise SemanticError(f"Vertex count must be non-negative, got {n}")
        neighbors: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise SemanticError(f"Edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise SemanticError(f"Self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise SemanticError(f"Duplicate edge {key}")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n:
                raise SizeMismatchError(f"Origin mapping has {len(origin)} entries, expected {n}")
        return cls(n=n, adjacency=adjacency, origin=origin)

    @property
    def degree(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency), default=0)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def leaves(self) -> List[int]:
        return [v for v, nbrs in enumerate(self.adjacency) if len(nbrs) == 1]

    def closed_neighborhood(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.adjacency[v] + (v,)))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def disjoint_union(*graphs: Graph) -> Graph:
    """Union of graphs, relabelled consecutively in argument order"""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


@dataclass(frozen=True)
class Coloring:
    """Partition given as a dense class identifier per vertex"""

    class_of: Tuple[int, ...]
    k: int

    def __post_init__(self):
        used = set(self.class_of)
        if used != set(range(self.k)):
            raise SemanticError(
                f"Class identifiers must cover 0..{self.k - 1} exactly, got {sorted(used)[:10]}"
            )

    @classmethod
    def from_labels(cls, labels: Sequence[Any]) -> 'Coloring':
        return canonicalize(labels)

    @classmethod
    def monochromatic(cls, n: int) -> 'Coloring':
        return cls(class_of=(0,) * n, k=1 if n else 0)

    @classmethod
    def singletons(cls, n: int) -> 'Coloring':
        return cls(class_of=tuple(range(n)), k=n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    def classes(self) -> List[List[int]]:
        members: List[List[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            members[c].append(v)
        return members

    def class_sizes(self) -> List[int]:
        sizes = [0] * self.k
        for c in self.class_of:
            sizes[c] += 1
        return sizes

    def to_dict(self) -> Dict[str, Any]:
        return {'k': self.k, 'class_of': list(self.class_of)}


def canonicalize(labels: Sequence[Any]) -> Coloring:
    """Rename classes to 0..k-1 in order of first appearance by vertex index"""
    mapping: Dict[Any, int] = {}
    class_of = []
    for label in labels:
        if label not in mapping:
            mapping[label] = len(mapping)
        class_of.append(mapping[label])
    return Coloring(class_of=tuple(class_of), k=len(mapping))


@dataclass(frozen=True)
class QuorumReport:
    """Per-vertex quorum counts and the overall verdict"""

    closed_size: Tuple[int, ...]
    same_count: Tuple[int, ...]
    satisfied: Tuple[bool, ...]
    tight: Tuple[bool, ...]
    valid: bool
    violations: Tuple[int, ...] = field(default_factory=tuple)

    def need(self, v: int) -> int:
        return (self.closed_size[v] + 1) // 2

    def violation_lines(self) -> List[str]:
        return [
            f"vertex {v}: same={self.same_count[v]} need={self.need(v)}" for v in self.violations
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'valid': self.valid,
            'violations': list(self.violations),
            'closed_size': list(self.closed_size),
            'same_count': list(self.same_count),
            'satisfied': list(self.satisfied),
            'tight': list(self.tight),
        }


def verify_quorum(graph: Graph, coloring: Coloring) -> QuorumReport:
    """Check the quorum property at every vertex"""
    class_of = coloring.class_of
    if len(class_of) != graph.n:
        raise SizeMismatchError(
            f"Coloring covers {len(class_of)} vertices, graph has {graph.n}"
        )

    closed_size = []
    same_count = []
    satisfied = []
    tight = []
    violations = []
    for v, nbrs in enumerate(graph.adjacency):
        c = class_of[v]
        same = 1
        for u in nbrs:
            if class_of[u] == c:
                same += 1
        closed = len(nbrs) + 1
        need = (closed + 1) // 2
        closed_size.append(closed)
        same_count.append(same)
        satisfied.append(same >= need)
        tight.append(same == need)
        if same < need:
            violations.append(v)

    if violations:
        logger.debug(f"Quorum check failed at {len(violations)} vertices")
    return QuorumReport(
        closed_size=tuple(closed_size),
        same_count=tuple(same_count),
        satisfied=tuple(satisfied),
        tight=tuple(tight),
        valid=not violations,
        violations=tuple(violations),
    )


def _require_quorum(graph: Graph, coloring: Coloring) -> QuorumReport:
    report = verify_quorum(graph, coloring)
    if not report.valid:
        raise NotAQuorumColoringError(
            f"Not a quorum coloring: {len(report.violations)} violating vertices "
            f"(first: {report.violation_lines()[0]})"
        )
    return report


def is_cost_effective(graph: Graph, coloring: Coloring) -> bool:
    """True when every non-leaf vertex meets the quorum threshold with equality"""
    report = _require_quorum(graph, coloring)
    return all(
        report.tight[v] for v, nbrs in enumerate(graph.adjacency) if len(nbrs) >= 2
    )


def union_coloring(n: int, joined: Iterable[Tuple[int, int]]) -> Coloring:
    """Coloring whose classes are the connected components of the joined pairs"""
    uf = UnionFind(range(n))
    for u, v in joined:
        uf.union(u, v)
    return canonicalize([uf[v] for v in range(n)])


def split_classes(graph: Graph, coloring: Coloring) -> Coloring:
    """Split every class into the connected components it induces"""
    class_of = coloring.class_of
    if len(class_of) != graph.n:
        raise SizeMismatchError(
            f"Coloring covers {len(class_of)} vertices, graph has {graph.n}"
        )
    return union_coloring(
        graph.n, ((u, v) for u, v in graph.edges() if class_of[u] == class_of[v])
    )


def check_class_connectivity(graph: Graph, coloring: Coloring) -> List[bool]:
    """Whether each class induces a connected subgraph, indexed by class id"""
    parts = split_classes(graph, coloring)
    representative: List[Optional[int]] = [None] * coloring.k
    connected = [True] * coloring.k
    for c, part in zip(coloring.class_of, parts.class_of):
        if representative[c] is None:
            representative[c] = part
        elif representative[c] != part:
            connected[c] = False
    return connected


def check_corollaries(graph: Graph, coloring: Coloring) -> List[Dict[str, Any]]:
    """
    Structural consequences every quorum coloring must satisfy.

    For every class V_i and v in V_i: |V_i| >= ⌊d(v)/2⌋ + 1, and a singleton class
    holds only a vertex of degree at most 1. Returns the violations found.
    """
    _require_quorum(graph, coloring)
    sizes = coloring.class_sizes()
    violations: List[Dict[str, Any]] = []
    for v, nbrs in enumerate(graph.adjacency):
        c = coloring.class_of[v]
        d = len(nbrs)
        if sizes[c] < d // 2 + 1:
            violations.append({
                'check': 'class-size',
                'vertex': v,
                'class': c,
                'message': f"class {c} has {sizes[c]} vertices, vertex {v} of degree {d} "
                           f"needs at least {d // 2 + 1}",
            })
        if sizes[c] == 1 and d > 1:
            violations.append({
                'check': 'singleton-degree',
                'vertex': v,
                'class': c,
                'message': f"singleton class {c} holds vertex {v} of degree {d}",
            })
    return violations


def observation_assertions(
    graph: Graph, coloring: Coloring
) -> List[Tuple[bool, bool, bool, bool]]:
    """
    The four equivalent forms of the quorum vertex property, evaluated per vertex:
    same >= ⌈|N[v]|/2⌉, same >= outside, d_in + 1 >= d_out, d_in >= ⌊d/2⌋.
    """
    class_of = coloring.class_of
    if len(class_of) != graph.n:
        raise SizeMismatchError(
            f"Coloring covers {len(class_of)} vertices, graph has {graph.n}"
        )
    result = []
    for v, nbrs in enumerate(graph.adjacency):
        d = len(nbrs)
        d_in = sum(1 for u in nbrs if class_of[u] == class_of[v])
        d_out = d - d_in
        same = d_in + 1
        result.append((
            same >= (d + 2) // 2,
            same >= d_out,
            d_in + 1 >= d_out,
            d_in >= d // 2,
        ))
    return result
