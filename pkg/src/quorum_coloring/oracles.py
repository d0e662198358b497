#!/usr/bin/env python3
"""
Exhaustive oracles for ψ_q on small instances.

Trees: a maximum quorum coloring has connected classes, so only the 2^(n-1)
partitions cut out by edge subsets need checking. In such a partition a vertex
keeps itself plus every neighbor across an uncut edge, which lets whole blocks of
cut masks be checked at once with numpy.

Graphs: every set partition, enumerated as restricted-growth strings.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .coloring import Coloring, Graph, canonicalize, union_coloring, verify_quorum
from .config import get_config
from .exceptions import InternalInvariantViolation, TooLargeError
from .tree_core import RootedTree

logger = logging.getLogger(__name__)

CHUNK_BITS = 16


def _scan_masks(
    lo: int, hi: int, incident: Sequence[Sequence[int]], need: Sequence[int], m: int
) -> Tuple[int, int]:
    """Best (class count, smallest mask) over cut masks lo..hi-1; (0, -1) if none valid"""
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = [((masks >> e) & 1).astype(np.int16) for e in range(m)]
    valid = np.ones(len(masks), dtype=bool)
    for v, edges in enumerate(incident):
        same = np.ones(len(masks), dtype=np.int16)
        for e in edges:
            same += 1 - bits[e]
        valid &= same >= need[v]
    cuts = np.zeros(len(masks), dtype=np.int16)
    for b in bits:
        cuts += b
    k = np.where(valid, cuts + 1, 0)
    best = int(k.max())
    if best == 0:
        return 0, -1
    return best, lo + int(np.argmax(k == best))


def _mask_coloring(tree: RootedTree, mask: int) -> Coloring:
    return union_coloring(
        tree.n, (edge for e, edge in enumerate(tree.edges()) if not (mask >> e) & 1)
    )


def brute_force_tree(
    tree: RootedTree,
    limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[int, Coloring]:
    """
    ψ_q of a small tree by exhaustive search over edge cuts.

    Returns:
        (ψ_q, witness); the witness comes from the numerically smallest maximizing
        cut mask, whatever the worker count.
    """
    config = get_config()
    limit = config.brute_force_tree_limit if limit is None else limit
    workers = config.workers if workers is None else max(1, workers)
    if tree.n > limit:
        raise TooLargeError(f"Tree has {tree.n} vertices, oracle limit is {limit}")
    if tree.n == 1:
        return 1, Coloring(class_of=(0,), k=1)

    edges = tree.edges()
    m = len(edges)
    incident: List[List[int]] = [[] for _ in range(tree.n)]
    for e, (p, v) in enumerate(edges):
        incident[p].append(e)
        incident[v].append(e)
    need = [(len(inc) + 2) // 2 for inc in incident]

    total = 1 << m
    step = 1 << CHUNK_BITS
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                _scan_masks,
                [lo for lo, _ in bounds],
                [hi for _, hi in bounds],
                [incident] * len(bounds),
                [need] * len(bounds),
                [m] * len(bounds),
            ))
    else:
        results = [_scan_masks(lo, hi, incident, need, m) for lo, hi in bounds]

    # chunks are in ascending mask order, so a strict > keeps the smallest mask
    best_k, best_mask = 0, -1
    for k, mask in results:
        if k > best_k:
            best_k, best_mask = k, mask

    witness = _mask_coloring(tree, best_mask)
    if witness.k != best_k or not verify_quorum(tree.to_graph(), witness).valid:
        raise InternalInvariantViolation(f"Oracle witness for mask {best_mask} failed to verify")
    logger.info(f"Tree oracle: n={tree.n}, psi_q={best_k}, masks={total}")
    return best_k, witness


def restricted_growth_strings(n: int) -> Iterator[List[int]]:
    """All set partitions of range(n) as restricted-growth strings, in lexicographic order"""
    if n == 0:
        yield []
        return
    a = [0] * n
    # b[i] = 1 + max(a[:i]), the largest value a[i] may take
    b = [1] * n
    while True:
        yield list(a)
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = top


def _is_quorum(adjacency: Sequence[Sequence[int]], labels: Sequence[int]) -> bool:
    for v, nbrs in enumerate(adjacency):
        c = labels[v]
        same = 1
        for u in nbrs:
            if labels[u] == c:
                same += 1
        if 2 * same < len(nbrs) + 1:
            return False
    return True


def brute_force_graph_witness(graph: Graph, limit: Optional[int] = None) -> Tuple[int, Coloring]:
    """ψ_q of a small graph with the lexicographically first maximizing partition"""
    limit = get_config().brute_force_graph_limit if limit is None else limit
    if graph.n > limit:
        raise TooLargeError(f"Graph has {graph.n} vertices, oracle limit is {limit}")
    if graph.n == 0:
        return 0, Coloring(class_of=(), k=0)

    best_k, best = 0, None
    for rgs in restricted_growth_strings(graph.n):
        k = max(rgs) + 1
        if k > best_k and _is_quorum(graph.adjacency, rgs):
            best_k, best = k, rgs
    witness = canonicalize(best)
    logger.info(f"Graph oracle: n={graph.n}, psi_q={best_k}")
    return best_k, witness


def brute_force_graph(graph: Graph, limit: Optional[int] = None) -> int:
    return brute_force_graph_witness(graph, limit)[0]
