#!/usr/bin/env python3
"""
Instance generators: perfect trees (N-ary, per level, locally perfect), random trees,
and seed quorum colorings for the refiner.

Generated trees are indexed level by level, left to right, so the j-th vertex of
depth i (v_{i,j}) has index ℓ_0 + ... + ℓ_{i-1} + j - 1.
"""

import logging
import random
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .coloring import Coloring, union_coloring, verify_quorum
from .config import get_config
from .exceptions import RetriesExhaustedError, ShapeSpecError, SizeOverflowError
from .tree_core import RootedTree, _assemble, build_from_parent_array, classify_shape

logger = logging.getLogger(__name__)

SEED_MODES = ('monochromatic', 'random-connected')


def _check_size(n: int, size_cap: Optional[int]) -> None:
    cap = get_config().size_cap if size_cap is None else size_cap
    if n > cap:
        raise SizeOverflowError(f"Tree would have {n} vertices, cap is {cap}")


def _from_level_counts(per_vertex: Sequence[Sequence[int]]) -> RootedTree:
    """
    Assemble a perfect tree from per-level child counts: per_vertex[i][t] is the child
    count of the t-th vertex at depth i. Children get consecutive indices.
    """
    parent: List[Optional[int]] = [None]
    children: List[List[int]] = []
    levels: List[List[int]] = [[0]]
    for counts in per_vertex:
        nxt = len(parent)
        level = []
        for v, count in zip(levels[-1], counts):
            kids = list(range(nxt, nxt + count))
            children.append(kids)
            parent.extend([v] * count)
            level.extend(kids)
            nxt += count
        levels.append(level)
    children.extend([] for _ in range(len(parent) - len(children)))
    return _assemble(parent, children, 0, levels)


def gen_perfect_per_level(counts: Sequence[int], size_cap: Optional[int] = None) -> RootedTree:
    """Perfect tree where every vertex at depth i has counts[i] children"""
    counts = list(counts)
    if any(isinstance(c, bool) or not isinstance(c, int) or c < 1 for c in counts):
        raise ShapeSpecError(f"Child counts must be positive integers, got {counts}")
    cap = get_config().size_cap if size_cap is None else size_cap
    n, width = 1, 1
    for c in counts:
        width *= c
        n += width
        _check_size(n, cap)

    parent: List[Optional[int]] = [None] * n
    children: List[Sequence[int]] = [()] * n
    levels = [range(0, 1)]
    start, width = 0, 1
    for c in counts:
        nxt = start + width
        for t in range(width):
            first = nxt + t * c
            children[start + t] = range(first, first + c)
            parent[first:first + c] = [start + t] * c
        levels.append(range(nxt, nxt + width * c))
        start, width = nxt, width * c
    tree = _assemble(parent, children, 0, levels)
    logger.debug(f"Generated per-level tree: h={len(counts)}, n={n}")
    return tree


def gen_perfect_nary(arity: int, height: int, size_cap: Optional[int] = None) -> RootedTree:
    if height < 0:
        raise ShapeSpecError(f"Height must be non-negative, got {height}")
    return gen_perfect_per_level([arity] * height, size_cap)


def gen_random_tree(n: int, seed: int) -> RootedTree:
    """Uniform random labelled tree via a random Prüfer sequence, rooted at vertex 0"""
    if n < 1:
        raise ShapeSpecError(f"Tree needs at least one vertex, got {n}")
    if n == 1:
        return build_from_parent_array([None])
    if n == 2:
        return build_from_parent_array([None, 0])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    graph = nx.from_prufer_sequence(sequence)
    parents: List[Optional[int]] = [None] * n
    for v, p in nx.bfs_predecessors(graph, 0):
        parents[v] = p
    return build_from_parent_array(parents)


def gen_random_bounded_tree(n: int, max_degree: int, seed: int) -> RootedTree:
    """Random tree grown by attaching each new vertex to an earlier one with spare degree"""
    if n < 1:
        raise ShapeSpecError(f"Tree needs at least one vertex, got {n}")
    if n > 2 and max_degree < 2 or n == 2 and max_degree < 1:
        raise ShapeSpecError(f"No tree on {n} vertices has maximum degree {max_degree}")
    rng = random.Random(seed)
    parents: List[Optional[int]] = [None] * n
    degree = [0] * n
    open_vertices = [0]
    for v in range(1, n):
        slot = rng.randrange(len(open_vertices))
        p = open_vertices[slot]
        parents[v] = p
        degree[p] += 1
        degree[v] = 1
        if degree[p] >= max_degree:
            open_vertices[slot] = open_vertices[-1]
            open_vertices.pop()
        if max_degree > 1:
            open_vertices.append(v)
    return build_from_parent_array(parents)


def gen_locally_perfect(
    height: int,
    choices: Sequence[int],
    seed: int,
    size_cap: Optional[int] = None,
) -> RootedTree:
    """
    Perfect tree of the given height where each sibling group draws one child count
    from choices. From height 3 on, with two or more distinct choices, draws that happen
    to give a per-level tree are rejected.
    """
    choices = sorted(set(choices))
    if height < 0 or not choices or choices[0] < 1:
        raise ShapeSpecError(f"Invalid locally perfect shape: h={height}, choices={choices}")
    config = get_config()
    cap = config.size_cap if size_cap is None else size_cap
    retries = int(config.get('generators', 'local_retries'))
    want_local = height >= 3 and len(choices) > 1

    rng = random.Random(seed)
    for attempt in range(retries):
        # child count of each vertex, level by level
        per_vertex: List[List[int]] = [[rng.choice(choices)]] if height else []
        n = 1
        for _ in range(1, height):
            level: List[int] = []
            for count in per_vertex[-1]:
                level.extend([rng.choice(choices)] * count)
            n += len(level)
            if n > cap:
                break
            per_vertex.append(level)
        else:
            n += sum(per_vertex[-1]) if per_vertex else 0
            if n <= cap:
                tree = _from_level_counts(per_vertex)
                if not want_local or not classify_shape(tree).is_per_level:
                    logger.debug(f"Locally perfect tree after {attempt + 1} draws: n={tree.n}")
                    return tree
    raise RetriesExhaustedError(
        f"No locally perfect tree with h={height}, choices={choices} within {retries} draws "
        f"(size cap {cap})"
    )


def _cut_coloring(tree: RootedTree, cut: Sequence[bool]) -> Coloring:
    kept = (edge for edge, is_cut in zip(tree.edges(), cut) if not is_cut)
    return union_coloring(tree.n, kept)


def gen_seed_coloring(
    tree: RootedTree,
    mode: str = 'monochromatic',
    seed: int = 0,
    retries: Optional[int] = None,
) -> Coloring:
    """
    A quorum coloring to feed the refiner.

    'random-connected' cuts each edge with a per-attempt random probability and keeps
    the first partition that passes the quorum check.
    """
    if mode not in SEED_MODES:
        raise ShapeSpecError(f"Unknown seed mode {mode!r}, expected one of {SEED_MODES}")
    if mode == 'monochromatic' or tree.n == 1:
        return Coloring.monochromatic(tree.n)

    retries = int(get_config().get('generators', 'seed_retries')) if retries is None else retries
    rng = random.Random(seed)
    graph = tree.to_graph()
    m = tree.n - 1
    for _ in range(retries):
        density = rng.random()
        coloring = _cut_coloring(tree, [rng.random() < density for _ in range(m)])
        if verify_quorum(graph, coloring).valid:
            return coloring
    raise RetriesExhaustedError(f"No valid random coloring found in {retries} attempts")


@dataclass(frozen=True)
class ShapeSpec:
    """Parsed instance descriptor: nary, levels, random or local"""

    kind: str
    counts: Tuple[int, ...] = ()
    height: int = 0
    n: int = 0
    choices: Tuple[int, ...] = ()
    seed: int = 0

    def describe(self) -> str:
        if self.kind == 'nary':
            return f"nary:{self.n},{self.height}"
        if self.kind == 'levels':
            return 'levels:' + ','.join(map(str, self.counts))
        if self.kind == 'random':
            return f"random:{self.n},{self.seed}"
        return f"local:{self.height},{{{','.join(map(str, self.choices))}}},{self.seed}"

    def to_dict(self) -> Dict[str, Any]:
        return {'shape': self.describe()}


_INT_LIST = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')
_LOCAL = re.compile(r'^\s*(\d+)\s*,\s*\{([\d,\s]+)\}\s*,\s*(-?\d+)\s*$')


def _ints(text: str) -> List[int]:
    return [int(part) for part in text.split(',')]


def parse_shape_spec(text: str) -> ShapeSpec:
    """
    Parse "nary:N,h", "levels:3,4,1", "random:n,seed" or "local:h,{1,2,3},seed".
    "levels:" with nothing after it is the single vertex.
    """
    kind, sep, rest = text.strip().partition(':')
    if not sep:
        raise ShapeSpecError(f"Shape spec {text!r} needs a 'kind:' prefix")

    if kind == 'levels':
        if not rest.strip():
            return ShapeSpec(kind='levels')
        if not _INT_LIST.match(rest):
            raise ShapeSpecError(f"Expected comma-separated counts, got {rest!r}")
        counts = tuple(_ints(rest))
        return ShapeSpec(kind='levels', counts=counts, height=len(counts))

    if kind in ('nary', 'random'):
        if not _INT_LIST.match(rest) or len(_ints(rest)) != 2:
            raise ShapeSpecError(f"Expected two integers after {kind}:, got {rest!r}")
        a, b = _ints(rest)
        if kind == 'nary':
            if a < 1:
                raise ShapeSpecError(f"Arity must be at least 1, got {a}")
            return ShapeSpec(kind='nary', counts=(a,) * b, height=b, n=a)
        return ShapeSpec(kind='random', n=a, seed=b)

    if kind == 'local':
        match = _LOCAL.match(rest)
        if not match:
            raise ShapeSpecError(f"Expected 'local:h,{{set}},seed', got {text!r}")
        choices = tuple(sorted(set(_ints(match.group(2).replace(' ', '')))))
        return ShapeSpec(
            kind='local', height=int(match.group(1)), choices=choices, seed=int(match.group(3))
        )

    raise ShapeSpecError(f"Unknown shape kind {kind!r}")


def build_shape(spec: ShapeSpec, size_cap: Optional[int] = None) -> RootedTree:
    if spec.kind in ('nary', 'levels'):
        return gen_perfect_per_level(spec.counts, size_cap)
    if spec.kind == 'random':
        _check_size(spec.n, size_cap)
        return gen_random_tree(spec.n, spec.seed)
    return gen_locally_perfect(spec.height, spec.choices, spec.seed, size_cap)


# The per-level tree (3, 4, 1) and its initial and final colorings, labelled as drawn:
# root, then depth 1 (3 vertices), depth 2 (12), depth 3 (12, v_{3,k} under v_{2,k}).

WORKED_EXAMPLE_COUNTS = (3, 4, 1)

_INITIAL_LABELS = (
    [1]
    + [1, 1, 1]
    + [1, 2, 3, 4, 1, 1, 5, 6, 1, 1, 1, 7]
    + [1, 2, 3, 4, 1, 8, 5, 6, 9, 10, 1, 7]
)

_FINAL_LABELS = (
    [1]
    + [11, 12, 1]
    + [11, 11, 3, 4, 12, 12, 5, 6, 1, 2, 13, 7]
    + [10, 14, 3, 4, 15, 8, 5, 6, 9, 2, 13, 7]
)


def worked_example_tree() -> RootedTree:
    return gen_perfect_per_level(WORKED_EXAMPLE_COUNTS)


def worked_example_initial_coloring() -> Coloring:
    return Coloring.from_labels(_INITIAL_LABELS)


def worked_example_final_coloring() -> Coloring:
    return Coloring.from_labels(_FINAL_LABELS)
