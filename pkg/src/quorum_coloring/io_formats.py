#!/usr/bin/env python3
"""
Text formats for trees, graphs, colorings and results, plus DOT export.

Vertex indices are 0-based everywhere. Tree formats:

    parent-array       first line n, then n lines with the parent of vertex 0..n-1
                       (-1 for the root)
    json               {"n": 3, "root": 0, "parents": [null, 0, 0]}
    edge-list-rooted   first line "n root", then n-1 lines "u v"

JSON documents carry "kind" and "version" next to their payload fields.
"""

import colorsys
import json
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from .coloring import Coloring, Graph
from .exceptions import (
    FormatSyntaxError,
    QuorumError,
    SemanticError,
    SizeMismatchError,
    TreeStructureError,
)
from .tree_core import RootedTree, build_from_parent_array

logger = logging.getLogger(__name__)

FORMAT_VERSION = '1.0'
TREE_FORMATS = ('parent-array', 'json', 'edge-list-rooted')
DOCUMENT_KINDS = ('tree', 'graph', 'coloring', 'report', 'trace', 'result')

PALETTE = (
    '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd', '#8c564b',
    '#e377c2', '#7f7f7f', '#bcbd22', '#17becf', '#aec7e8', '#ffbb78',
    '#98df8a', '#ff9896', '#c5b0d5', '#c49c94', '#f7b6d2', '#c7c7c7',
    '#dbdb8d', '#9edae5', '#393b79', '#637939', '#8c6d31', '#843c39',
)


@dataclass
class Document:
    """Versioned JSON envelope: kind tag plus payload fields"""

    kind: str
    payload: Dict[str, Any] = field(default_factory=dict)
    version: str = FORMAT_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'version': self.version, **self.payload}


def emit_document(doc: Document, pretty: bool = False) -> str:
    if doc.kind not in DOCUMENT_KINDS:
        raise SemanticError(f"Unknown document kind {doc.kind!r}")
    if pretty:
        return json.dumps(doc.to_dict(), indent=2) + '\n'
    return json.dumps(doc.to_dict(), separators=(',', ':')) + '\n'


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatSyntaxError(e.msg, e.lineno, e.colno) from e


def parse_document(text: str, expected: Optional[str] = None) -> Document:
    """
    Parse a JSON document. A bare payload without "kind" is accepted and takes the
    expected kind.
    """
    data = _load_json(text)
    if not isinstance(data, dict):
        raise SemanticError(f"Expected a JSON object, got {type(data).__name__}")
    data = dict(data)
    kind = data.pop('kind', expected)
    version = data.pop('version', FORMAT_VERSION)
    if expected is not None and kind != expected:
        raise SemanticError(f"Expected a {expected} document, got {kind!r}")
    return Document(kind=kind, payload=data, version=str(version))


# Trees

def _int_token(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatSyntaxError(f"expected an integer, got {token!r}", line, column) from None


def _content_lines(text: str) -> List[str]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _build(parents: List[Optional[int]]) -> RootedTree:
    try:
        return build_from_parent_array(parents)
    except TreeStructureError as e:
        raise SemanticError(str(e)) from e


def _parse_parent_array(text: str) -> RootedTree:
    lines = _content_lines(text)
    if not lines:
        raise FormatSyntaxError("empty input, expected the vertex count", 1, 1)
    n = _int_token(lines[0].strip(), 1, 1)
    if n < 1:
        raise SemanticError(f"Vertex count must be positive, got {n}")
    if len(lines) - 1 < n:
        raise FormatSyntaxError(
            f"expected {n} parent entries, found {len(lines) - 1}", len(lines) + 1, 1
        )
    if len(lines) - 1 > n:
        raise FormatSyntaxError(f"unexpected extra line after {n} parent entries", n + 2, 1)

    parents: List[Optional[int]] = []
    for number, raw in enumerate(lines[1:], start=2):
        token = raw.strip()
        column = len(raw) - len(raw.lstrip()) + 1
        value = _int_token(token, number, column)
        parents.append(None if value == -1 else value)
    return _build(parents)


def _parse_tree_json(text: str) -> RootedTree:
    payload = parse_document(text, expected='tree').payload
    parents = payload.get('parents')
    if not isinstance(parents, list):
        raise SemanticError("Tree document needs a 'parents' list")
    tree = _build(parents)
    if 'n' in payload and payload['n'] != tree.n:
        raise SemanticError(f"Declared n={payload['n']} but {tree.n} parents given")
    if 'root' in payload and payload['root'] != tree.root:
        raise SemanticError(f"Declared root {payload['root']} but vertex {tree.root} has no parent")
    return tree


def _parse_edge_list(text: str) -> RootedTree:
    lines = _content_lines(text)
    if not lines:
        raise FormatSyntaxError("empty input, expected 'n root'", 1, 1)
    header = lines[0].split()
    if len(header) != 2:
        raise FormatSyntaxError("expected 'n root' on the first line", 1, 1)
    n = _int_token(header[0], 1, 1)
    root = _int_token(header[1], 1, len(header[0]) + 2)
    if n < 1 or not 0 <= root < n:
        raise SemanticError(f"Invalid header: n={n}, root={root}")
    if len(lines) - 1 != n - 1:
        raise FormatSyntaxError(
            f"expected {n - 1} edge lines, found {len(lines) - 1}", min(len(lines), n) + 1, 1
        )

    adjacency: List[List[int]] = [[] for _ in range(n)]
    for number, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise FormatSyntaxError("expected 'u v'", number, 1)
        u = _int_token(parts[0], number, 1)
        v = _int_token(parts[1], number, len(parts[0]) + 2)
        if not (0 <= u < n and 0 <= v < n):
            raise SemanticError(f"Edge ({u}, {v}) on line {number} is out of range")
        adjacency[u].append(v)
        adjacency[v].append(u)

    parents: List[Optional[int]] = [None] * n
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parents[v] = u
                queue.append(v)
    if not all(seen):
        raise SemanticError("Edge list is not connected, so it is not a tree")
    return _build(parents)


def parse_tree(text: str, fmt: str = 'parent-array') -> RootedTree:
    """
    Raises:
        FormatSyntaxError: malformed text (with line and column)
        SemanticError: well-formed text that is not a rooted tree
    """
    if fmt == 'parent-array':
        return _parse_parent_array(text)
    if fmt == 'json':
        return _parse_tree_json(text)
    if fmt == 'edge-list-rooted':
        return _parse_edge_list(text)
    raise SemanticError(f"Unknown tree format {fmt!r}, expected one of {TREE_FORMATS}")


def emit_tree(tree: RootedTree, fmt: str = 'parent-array') -> str:
    if fmt == 'parent-array':
        rows = [str(tree.n)] + ['-1' if p is None else str(p) for p in tree.parent]
        return '\n'.join(rows) + '\n'
    if fmt == 'json':
        return emit_document(Document('tree', tree.to_dict()))
    if fmt == 'edge-list-rooted':
        rows = [f"{tree.n} {tree.root}"] + [f"{p} {v}" for p, v in tree.edges()]
        return '\n'.join(rows) + '\n'
    raise SemanticError(f"Unknown tree format {fmt!r}, expected one of {TREE_FORMATS}")


# Colorings and graphs

def emit_coloring(coloring: Coloring) -> str:
    return emit_document(Document('coloring', coloring.to_dict()))


def parse_coloring(text: str) -> Coloring:
    """
    Read a coloring document, or the witness of a result document. Labels are
    canonicalized.
    """
    doc = parse_document(text)
    payload = doc.payload
    if doc.kind == 'result':
        payload = payload.get('witness')
        if not isinstance(payload, dict):
            raise SemanticError("Result document carries no witness coloring")
    elif doc.kind not in (None, 'coloring'):
        raise SemanticError(f"Expected a coloring document, got {doc.kind!r}")

    labels = payload.get('class_of')
    if not isinstance(labels, list):
        raise SemanticError("Coloring needs a 'class_of' list")
    for v, label in enumerate(labels):
        if isinstance(label, bool) or not isinstance(label, (int, str)):
            raise SemanticError(
                f"Class label of vertex {v} must be an integer or a string, got {label!r}"
            )
    coloring = Coloring.from_labels(labels)
    if 'k' in payload and payload['k'] != coloring.k:
        raise SemanticError(f"Declared k={payload['k']} but {coloring.k} classes are used")
    return coloring


def emit_graph(graph: Graph) -> str:
    payload = {'n': graph.n, 'edges': [list(e) for e in graph.edges()]}
    return emit_document(Document('graph', payload))


def parse_graph(text: str) -> Graph:
    payload = parse_document(text, expected='graph').payload
    n = payload.get('n')
    edges = payload.get('edges')
    if not isinstance(n, int) or not isinstance(edges, list):
        raise SemanticError("Graph document needs an integer 'n' and an 'edges' list")
    try:
        return Graph.from_edges(n, (tuple(e) for e in edges))
    except (TypeError, ValueError) as e:
        if isinstance(e, QuorumError):
            raise
        raise SemanticError(f"Malformed edge list: {e}") from e


# Results

def emit_result(record: Dict[str, Any], pretty: bool = False) -> str:
    """One JSON line (or indented JSON with pretty) for a solver result"""
    return emit_document(Document('result', dict(record)), pretty=pretty)


# DOT

def class_color(class_id: int) -> str:
    """Fill color for a class: the fixed palette first, then evenly spread hues"""
    if class_id < len(PALETTE):
        return PALETTE[class_id]
    hue = ((class_id - len(PALETTE)) * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.55, 0.9)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def emit_dot(
    structure: Union[RootedTree, Graph],
    coloring: Coloring,
    name: str = 'quorum',
    directed: bool = False,
) -> str:
    """
    DOT text with one filled node per vertex. Tree nodes are labelled "v_{i,j} / class"
    with 1-based j, graph nodes "v / class".
    """
    if coloring.n != structure.n:
        raise SizeMismatchError(
            f"Coloring covers {coloring.n} vertices, structure has {structure.n}"
        )
    if isinstance(structure, RootedTree):
        positions: List[Tuple[int, int]] = structure.positions()
        labels = [f"v_{{{i},{j}}}" for i, j in positions]
        edges = structure.edges()
    else:
        labels = [str(v) for v in range(structure.n)]
        edges = structure.edges()

    keyword, arrow = ('digraph', '->') if directed else ('graph', '--')
    lines = [f"{keyword} {_quote(name)} {{", '  node [style=filled];']
    for v, c in enumerate(coloring.class_of):
        lines.append(
            f"  {v} [label={_quote(f'{labels[v]} / {c}')}, fillcolor={_quote(class_color(c))}];"
        )
    for u, v in edges:
        lines.append(f"  {u} {arrow} {v};")
    lines.append('}')
    return '\n'.join(lines) + '\n'
