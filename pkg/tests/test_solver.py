#!/usr/bin/env python3
"""
Tests for the linear-time solver and the closed recurrence
"""

import itertools
import time

import pytest

from quorum_coloring.coloring import (
    check_class_connectivity,
    check_corollaries,
    is_cost_effective,
    verify_quorum,
)
from quorum_coloring.exceptions import EmptyTreeError, NotPerLevelError, SemanticError
from quorum_coloring.generators import (
    gen_perfect_nary,
    gen_perfect_per_level,
    worked_example_final_coloring,
    worked_example_initial_coloring,
    worked_example_tree,
)
from quorum_coloring.oracles import brute_force_tree
from quorum_coloring.solver import algo2_solve, alpha_closed, alpha_trace_of
from quorum_coloring.tree_core import build_from_parent_array


def small_count_vectors(max_n=20):
    """Every counts vector with entries 1..4, height 1..4 and at most max_n vertices"""
    for h in range(1, 5):
        for counts in itertools.product(range(1, 5), repeat=h):
            n, width = 1, 1
            for c in counts:
                width *= c
                n += width
            if n <= max_n:
                yield list(counts)


class TestWorkedExample:
    """The (3, 4, 1) tree"""

    def test_total_is_fifteen(self):
        tree = worked_example_tree()
        start = time.perf_counter()
        coloring, trace = algo2_solve(tree)
        elapsed = time.perf_counter() - start
        assert trace.total == 15
        assert coloring.k == 15
        graph = tree.to_graph()
        assert verify_quorum(graph, coloring).valid
        assert is_cost_effective(graph, coloring)
        assert all(check_class_connectivity(graph, coloring))
        assert elapsed < 0.05

    def test_solver_values_per_level(self):
        _, trace = algo2_solve(worked_example_tree())
        assert trace.values == [[3], [3, 2, 2], [1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0]]

    def test_same_values_as_drawn_coloring_up_to_order(self):
        # the solver keeps the parent's class on the lowest-indexed children, the drawing
        # on other children, so per-vertex values match only as a multiset per level
        _, solved = algo2_solve(worked_example_tree())
        drawn = alpha_trace_of(worked_example_tree(), worked_example_final_coloring())
        for mine, theirs in zip(solved.values, drawn.values):
            assert sorted(mine) == sorted(theirs)

    def test_values_read_off_final_coloring(self):
        trace = alpha_trace_of(worked_example_tree(), worked_example_final_coloring())
        assert trace.flat() == [3, 2, 2, 3, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0]
        assert trace.total == 15

    def test_initial_coloring_is_not_cost_effective(self):
        with pytest.raises(SemanticError):
            alpha_trace_of(worked_example_tree(), worked_example_initial_coloring())

    def test_recurrence(self):
        _, trace = algo2_solve(worked_example_tree())
        assert trace.shared == [0, 1, 5, 7]
        assert trace.recurrence_holds([3, 4, 1])


class TestSmallTrees:
    """Hand-checked instances"""

    def test_star(self):
        coloring, trace = algo2_solve(gen_perfect_per_level([2]))
        assert trace.total == 2
        assert coloring.class_of == (0, 0, 1)

    def test_perfect_binary_height_two(self):
        _, trace = algo2_solve(gen_perfect_nary(2, 2))
        assert trace.total == 5

    def test_single_vertex(self):
        coloring, trace = algo2_solve(build_from_parent_array([None]))
        assert coloring.k == 1
        assert trace.total == 1
        assert trace.values == []

    def test_path(self):
        coloring, trace = algo2_solve(gen_perfect_per_level([1, 1, 1]))
        assert trace.total == coloring.k == 3

    def test_rejects_non_per_level(self):
        with pytest.raises(NotPerLevelError):
            algo2_solve(build_from_parent_array([None, 0, 0, 1]))

    def test_rejects_missing_tree(self):
        with pytest.raises(EmptyTreeError):
            algo2_solve(None)

    def test_trace_serializes(self):
        _, trace = algo2_solve(gen_perfect_per_level([2]))
        data = trace.to_dict()
        assert data['alpha'] == 2
        assert data['ops']['total'] == trace.ops.total


class TestAlphaClosed:
    """Closed recurrence against the solver"""

    def test_known_values(self):
        assert alpha_closed([3, 4, 1]) == 15
        assert alpha_closed([]) == 1
        assert alpha_closed([2, 2]) == 5
        assert alpha_closed([2]) == 2

    @pytest.mark.parametrize("counts", list(small_count_vectors(max_n=200)))
    def test_matches_solver(self, counts):
        _, trace = algo2_solve(gen_perfect_per_level(counts))
        assert alpha_closed(counts) == trace.total
        assert trace.recurrence_holds(counts)


class TestSolverOutput:
    """Every solver output is a cost-effective, connected quorum coloring"""

    @pytest.mark.parametrize("counts", list(small_count_vectors(max_n=200)))
    def test_output_checks(self, counts):
        tree = gen_perfect_per_level(counts)
        coloring, trace = algo2_solve(tree)
        graph = tree.to_graph()
        assert verify_quorum(graph, coloring).valid
        assert is_cost_effective(graph, coloring)
        assert all(check_class_connectivity(graph, coloring))
        assert check_corollaries(graph, coloring) == []
        assert trace.ops.total < 5 * tree.n


class TestOracleEquivalence:
    """The solver's count is the maximum over all quorum colorings"""

    @pytest.mark.parametrize("counts", list(small_count_vectors(max_n=20)))
    def test_matches_exhaustive_search(self, counts):
        tree = gen_perfect_per_level(counts)
        _, trace = algo2_solve(tree)
        psi_q, _ = brute_force_tree(tree, limit=20)
        assert trace.total == psi_q


class TestOperationCount:
    """Instrumented work stays below 5n"""

    @pytest.mark.parametrize("h", range(10, 15))
    def test_perfect_binary(self, h):
        tree = gen_perfect_nary(2, h)
        _, trace = algo2_solve(tree)
        assert trace.ops.total < 5 * tree.n

    @pytest.mark.parametrize("h", range(10, 15))
    def test_paths_of_the_same_size(self, h):
        n = 2 ** (h + 1) - 1
        tree = gen_perfect_per_level([1] * (n - 1))
        _, trace = algo2_solve(tree)
        assert trace.ops.total < 5 * tree.n

    @pytest.mark.slow
    @pytest.mark.parametrize("h", range(15, 21))
    def test_large_perfect_binary_and_paths(self, h):
        for tree in (gen_perfect_nary(2, h), gen_perfect_per_level([1] * (2 ** (h + 1) - 2))):
            _, trace = algo2_solve(tree)
            assert trace.ops.total < 5 * tree.n
