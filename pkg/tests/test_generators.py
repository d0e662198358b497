#!/usr/bin/env python3
"""
Tests for instance generators and shape specs
"""

import unittest
from pathlib import Path
import sys

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from quorum_coloring.coloring import is_cost_effective, verify_quorum
from quorum_coloring.exceptions import (
    RetriesExhaustedError,
    ShapeSpecError,
    SizeOverflowError,
)
from quorum_coloring.generators import (
    ShapeSpec,
    build_shape,
    gen_locally_perfect,
    gen_perfect_nary,
    gen_perfect_per_level,
    gen_random_bounded_tree,
    gen_random_tree,
    gen_seed_coloring,
    parse_shape_spec,
    worked_example_final_coloring,
    worked_example_initial_coloring,
    worked_example_tree,
)
from quorum_coloring.tree_core import ShapeKind, build_from_parent_array, classify_shape


class TestPerfectTrees(unittest.TestCase):
    """Test cases for per-level and N-ary generation"""

    def test_worked_example_layout(self):
        tree = gen_perfect_per_level([3, 4, 1])
        self.assertEqual(tree.n, 28)
        self.assertEqual(tree.level_sizes, (1, 3, 12, 12))
        self.assertEqual(tree.children[1], (4, 5, 6, 7))
        # v_{3,k} hangs under v_{2,k}
        self.assertEqual(tree.children[4], (16,))
        self.assertEqual(tree.children[15], (27,))

    def test_matches_parent_array_construction(self):
        tree = gen_perfect_per_level([2, 3])
        rebuilt = build_from_parent_array(tree.parent_array())
        self.assertEqual(tree, rebuilt)

    def test_small_shapes(self):
        self.assertEqual(gen_perfect_per_level([2]).children[0], (1, 2))
        self.assertEqual(gen_perfect_per_level([1, 1, 1]).parent, (None, 0, 1, 2))
        self.assertEqual(gen_perfect_nary(2, 2).n, 7)
        self.assertEqual(gen_perfect_nary(2, 0).n, 1)
        self.assertEqual(gen_perfect_nary(3, 2).n, 13)

    def test_classification(self):
        shape = classify_shape(gen_perfect_per_level([3, 1, 2]))
        self.assertEqual(shape.kind, ShapeKind.PERFECT_PER_LEVEL)
        self.assertEqual(shape.counts, (3, 1, 2))
        self.assertEqual(classify_shape(gen_perfect_nary(3, 3)).counts, (3, 3, 3))

    def test_size_cap(self):
        with self.assertRaises(SizeOverflowError):
            gen_perfect_per_level([3, 4], size_cap=10)
        with self.assertRaises(SizeOverflowError):
            gen_perfect_nary(2, 40)

    def test_invalid_counts(self):
        with self.assertRaises(ShapeSpecError):
            gen_perfect_per_level([2, 0])
        with self.assertRaises(ShapeSpecError):
            gen_perfect_nary(2, -1)


class TestRandomTrees(unittest.TestCase):
    """Test cases for random tree generation"""

    def test_degenerate_sizes(self):
        self.assertEqual(gen_random_tree(1, 5).n, 1)
        self.assertEqual(gen_random_tree(2, 5).parent, (None, 0))

    def test_structure_and_determinism(self):
        tree = gen_random_tree(8, 42)
        self.assertEqual(tree.n, 8)
        self.assertEqual(tree.root, 0)
        self.assertEqual(len(tree.edges()), 7)
        self.assertEqual(tree, gen_random_tree(8, 42))
        self.assertEqual(build_from_parent_array(tree.parent_array()), tree)

    def test_bounded_degree(self):
        for seed in range(30):
            tree = gen_random_bounded_tree(20, 3, seed)
            self.assertEqual(tree.n, 20)
            self.assertLessEqual(tree.max_degree, 3)

    def test_bounded_degree_rejects_impossible(self):
        with self.assertRaises(ShapeSpecError):
            gen_random_bounded_tree(5, 1, 0)

    def test_locally_perfect(self):
        tree = gen_locally_perfect(3, [1, 2, 3], seed=4)
        shape = classify_shape(tree)
        self.assertEqual(shape.kind, ShapeKind.LOCALLY_PERFECT)
        self.assertEqual(shape.height, 3)
        self.assertEqual(tree, gen_locally_perfect(3, [1, 2, 3], seed=4))

    def test_locally_perfect_low_height_is_per_level(self):
        tree = gen_locally_perfect(2, [2, 3], seed=1)
        self.assertTrue(classify_shape(tree).is_per_level)
        self.assertEqual(tree.height, 2)

    def test_locally_perfect_size_cap(self):
        with self.assertRaises(RetriesExhaustedError):
            gen_locally_perfect(5, [3, 4], seed=0, size_cap=20)


class TestSeedColorings(unittest.TestCase):
    """Test cases for refiner inputs"""

    def test_monochromatic(self):
        coloring = gen_seed_coloring(gen_random_tree(10, 1), 'monochromatic')
        self.assertEqual(coloring.k, 1)

    def test_random_connected_is_valid(self):
        for seed in range(50):
            tree = gen_random_tree(2 + seed % 14, seed)
            coloring = gen_seed_coloring(tree, 'random-connected', seed)
            self.assertTrue(verify_quorum(tree.to_graph(), coloring).valid)

    def test_star_and_edge(self):
        star = gen_perfect_per_level([2])
        edge = gen_perfect_per_level([1])
        for seed in range(20):
            self.assertIn(gen_seed_coloring(star, 'random-connected', seed).k, (1, 2))
            self.assertIn(gen_seed_coloring(edge, 'random-connected', seed).k, (1, 2))

    def test_deterministic(self):
        tree = gen_random_tree(12, 9)
        self.assertEqual(
            gen_seed_coloring(tree, 'random-connected', 3),
            gen_seed_coloring(tree, 'random-connected', 3),
        )

    def test_retries_exhausted(self):
        with self.assertRaises(RetriesExhaustedError):
            gen_seed_coloring(gen_random_tree(6, 0), 'random-connected', 0, retries=0)

    def test_unknown_mode(self):
        with self.assertRaises(ShapeSpecError):
            gen_seed_coloring(gen_random_tree(3, 0), 'rainbow')


class TestShapeSpec(unittest.TestCase):
    """Test cases for shape spec strings"""

    def test_parse_each_kind(self):
        self.assertEqual(parse_shape_spec('nary:2,3').counts, (2, 2, 2))
        self.assertEqual(parse_shape_spec('levels:3,4,1').counts, (3, 4, 1))
        self.assertEqual(parse_shape_spec('levels:').counts, ())
        self.assertEqual(parse_shape_spec('random:8,42'), ShapeSpec(kind='random', n=8, seed=42))
        local = parse_shape_spec('local:3,{1,2, 3},7')
        self.assertEqual((local.height, local.choices, local.seed), (3, (1, 2, 3), 7))

    def test_describe_round_trip(self):
        for text in ('nary:2,3', 'levels:3,4,1', 'random:8,42', 'local:3,{1,2,3},7'):
            self.assertEqual(parse_shape_spec(text).describe(), text)

    def test_build(self):
        self.assertEqual(build_shape(parse_shape_spec('levels:3,4,1')).n, 28)
        self.assertEqual(build_shape(parse_shape_spec('random:8,42')), gen_random_tree(8, 42))

    def test_malformed(self):
        for text in ('nary', 'nary:2', 'levels:a,b', 'cube:3', 'local:3,1,2,7', 'nary:0,2'):
            with self.subTest(text=text):
                with self.assertRaises(ShapeSpecError):
                    parse_shape_spec(text)


class TestWorkedExampleFixtures(unittest.TestCase):
    """Test cases for the drawn colorings"""

    def test_initial(self):
        tree = worked_example_tree()
        coloring = worked_example_initial_coloring()
        self.assertEqual(coloring.k, 10)
        self.assertTrue(verify_quorum(tree.to_graph(), coloring).valid)
        self.assertFalse(is_cost_effective(tree.to_graph(), coloring))

    def test_final(self):
        tree = worked_example_tree()
        coloring = worked_example_final_coloring()
        self.assertEqual(coloring.k, 15)
        self.assertTrue(is_cost_effective(tree.to_graph(), coloring))


if __name__ == '__main__':
    unittest.main()
