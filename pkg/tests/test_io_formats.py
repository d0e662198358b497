#!/usr/bin/env python3
"""
Tests for text formats and DOT export
"""

import json
import re

import pytest

from quorum_coloring.coloring import Coloring, Graph, complete_graph
from quorum_coloring.exceptions import FormatSyntaxError, SemanticError, SizeMismatchError
from quorum_coloring.generators import (
    gen_locally_perfect,
    gen_perfect_per_level,
    gen_random_tree,
    worked_example_tree,
)
from quorum_coloring.io_formats import (
    FORMAT_VERSION,
    PALETTE,
    TREE_FORMATS,
    Document,
    class_color,
    emit_coloring,
    emit_document,
    emit_dot,
    emit_graph,
    emit_result,
    emit_tree,
    parse_coloring,
    parse_document,
    parse_graph,
    parse_tree,
)
from quorum_coloring.solver import algo2_solve


def generated_instances():
    for seed in range(60):
        yield gen_random_tree(1 + seed % 25, seed)
    for counts in ([], [1], [2], [3, 4, 1], [2, 2, 2], [1, 3], [4, 1, 2]):
        yield gen_perfect_per_level(counts)
    for seed in range(33):
        yield gen_locally_perfect(3, [1, 2, 3], seed)


def dot_is_well_formed(text):
    """Balanced braces, every label and fill color quoted, one statement per line"""
    if text.count('{') - text.count('}') != 0 or not text.rstrip().endswith('}'):
        return False
    body = text.strip().splitlines()[1:-1]
    for line in body:
        line = line.strip()
        if not line.endswith(';'):
            return False
        if 'label=' in line and not re.search(r'label="[^"]*"', line):
            return False
    return True


class TestParseTree:
    """Tree parsing and error locations"""

    def test_parent_array(self):
        tree = parse_tree("3\n-1\n0\n0\n")
        assert tree.children[0] == (1, 2)

    def test_missing_line(self):
        with pytest.raises(FormatSyntaxError) as excinfo:
            parse_tree("3\n-1\n0\n")
        assert excinfo.value.line == 4
        assert str(excinfo.value).startswith("line 4, column 1:")

    def test_bad_token(self):
        with pytest.raises(FormatSyntaxError) as excinfo:
            parse_tree("3\n-1\n  x\n0\n")
        assert (excinfo.value.line, excinfo.value.column) == (3, 3)

    def test_extra_line(self):
        with pytest.raises(FormatSyntaxError):
            parse_tree("2\n-1\n0\n0\n")

    def test_two_roots_is_semantic(self):
        with pytest.raises(SemanticError):
            parse_tree("2\n-1\n-1\n")

    def test_json(self):
        tree = parse_tree('{"n":2,"root":0,"parents":[null,0]}', 'json')
        assert tree.n == 2
        assert tree.edges() == [(0, 1)]

    def test_json_syntax_error_location(self):
        with pytest.raises(FormatSyntaxError) as excinfo:
            parse_tree('{"n": 2,\n "parents": [null, 0,]}', 'json')
        assert excinfo.value.line == 2

    def test_json_declared_values_checked(self):
        with pytest.raises(SemanticError):
            parse_tree('{"n":3,"root":0,"parents":[null,0]}', 'json')
        with pytest.raises(SemanticError):
            parse_tree('{"n":2,"root":1,"parents":[null,0]}', 'json')

    def test_edge_list(self):
        tree = parse_tree("4 2\n0 1\n1 2\n2 3\n", 'edge-list-rooted')
        assert tree.root == 2
        assert tree.parent == (1, 2, None, 2)

    def test_edge_list_not_a_tree(self):
        with pytest.raises(SemanticError):
            parse_tree("4 0\n0 1\n1 0\n2 3\n", 'edge-list-rooted')

    def test_edge_list_wrong_count(self):
        with pytest.raises(FormatSyntaxError):
            parse_tree("3 0\n0 1\n", 'edge-list-rooted')

    def test_unknown_format(self):
        with pytest.raises(SemanticError):
            parse_tree("1\n-1\n", 'yaml')


class TestRoundTrips:
    """parse after emit is the identity"""

    @pytest.mark.parametrize("fmt", TREE_FORMATS)
    def test_trees(self, fmt):
        count = 0
        for tree in generated_instances():
            text = emit_tree(tree, fmt)
            assert parse_tree(text, fmt).parent == tree.parent
            assert emit_tree(parse_tree(text, fmt), fmt) == text
            count += 1
        assert count == 100

    def test_coloring(self):
        coloring = Coloring.from_labels([0, 1, 1, 2, 0])
        assert parse_coloring(emit_coloring(coloring)) == coloring

    def test_graph(self):
        graph = complete_graph(4)
        assert parse_graph(emit_graph(graph)) == graph

    def test_document(self):
        doc = Document('trace', {'steps': [1, 2]})
        parsed = parse_document(emit_document(doc))
        assert parsed == doc


class TestDocuments:
    """Envelope fields and result lines"""

    def test_every_document_has_version(self):
        for text in (
            emit_tree(gen_perfect_per_level([2]), 'json'),
            emit_coloring(Coloring.monochromatic(2)),
            emit_graph(complete_graph(3)),
            emit_result({'method': 'algo2', 'psi_q': 15}),
        ):
            assert json.loads(text)['version'] == FORMAT_VERSION
            assert text.endswith('\n')

    def test_result_is_one_line(self):
        text = emit_result({'method': 'theorem1_bound', 'value': 3})
        assert text.count('\n') == 1
        data = json.loads(text)
        assert data['method'] == 'theorem1_bound'
        assert data['value'] == 3
        assert data['kind'] == 'result'

    def test_pretty_result(self):
        text = emit_result({'method': 'bruteforce_graph', 'psi_q': 1}, pretty=True)
        assert text.count('\n') > 1
        assert json.loads(text)['psi_q'] == 1

    def test_coloring_from_result_witness(self):
        text = emit_result({'method': 'algo2', 'witness': {'k': 2, 'class_of': [0, 0, 1]}})
        assert parse_coloring(text).class_of == (0, 0, 1)

    def test_result_without_witness(self):
        with pytest.raises(SemanticError):
            parse_coloring(emit_result({'method': 'bound', 'value': 2}))

    def test_wrong_kind(self):
        with pytest.raises(SemanticError):
            parse_graph(emit_coloring(Coloring.monochromatic(2)))

    def test_declared_k_checked(self):
        with pytest.raises(SemanticError):
            parse_coloring('{"k": 3, "class_of": [0, 1]}')

    @pytest.mark.parametrize("labels", [
        '[[0], [0], [1]]', '[0, {"c": 1}, 0]', '[0, null, 1]', '[true, false, true]',
    ])
    def test_labels_must_be_scalars(self, labels):
        with pytest.raises(SemanticError):
            parse_coloring('{"kind": "coloring", "class_of": ' + labels + '}')

    def test_string_labels(self):
        assert parse_coloring('{"class_of": ["a", "b", "a"]}').class_of == (0, 1, 0)


class TestDot:
    """DOT export"""

    def test_star(self):
        tree = gen_perfect_per_level([2])
        text = emit_dot(tree, Coloring.from_labels([0, 0, 1]))
        assert dot_is_well_formed(text)
        assert text.startswith('graph "quorum" {')
        assert len(set(re.findall(r'fillcolor="(#[0-9a-f]{6})"', text))) == 2
        assert len(re.findall(r'^\s+\d+ \[label=', text, re.M)) == 3
        assert len(re.findall(r' -- ', text)) == 2
        assert 'label="v_{1,2} / 1"' in text

    def test_monochromatic_edge(self):
        text = emit_dot(gen_perfect_per_level([1]), Coloring.monochromatic(2))
        assert len(set(re.findall(r'fillcolor="(#[0-9a-f]{6})"', text))) == 1
        assert len(re.findall(r' -- ', text)) == 1

    def test_worked_example_has_fifteen_fills(self):
        tree = worked_example_tree()
        coloring, _ = algo2_solve(tree)
        text = emit_dot(tree, coloring, directed=True)
        assert dot_is_well_formed(text)
        assert len(set(re.findall(r'fillcolor="(#[0-9a-f]{6})"', text))) == 15
        assert ' -> ' in text

    def test_graph_labels(self):
        text = emit_dot(complete_graph(3), Coloring.monochromatic(3))
        assert 'label="2 / 0"' in text
        assert dot_is_well_formed(text)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            emit_dot(Graph.from_edges(2, [(0, 1)]), Coloring.monochromatic(3))

    def test_palette_then_distinct_hues(self):
        colors = [class_color(c) for c in range(40)]
        assert colors[:len(PALETTE)] == list(PALETTE)
        assert len(set(colors)) == 40
        assert all(re.fullmatch(r'#[0-9a-f]{6}', c) for c in colors)
