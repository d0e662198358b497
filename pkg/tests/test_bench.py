#!/usr/bin/env python3
"""
Tests for the linear-scaling benchmark
"""

import pytest

from quorum_coloring.bench import BenchRow, bench_linear, family_counts
from quorum_coloring.config import get_config
from quorum_coloring.exceptions import ShapeSpecError


@pytest.fixture
def lenient_config():
    """Timing ratios are not asserted outside the slow tests"""
    return get_config({'benchmark': {'ratio_threshold': 1000.0, 'repetitions': 1}})


class TestFamilies:
    """Family strings"""

    def test_nary(self):
        assert family_counts('nary:2', 4) == [2, 2, 2, 2]

    def test_levels_cycles(self):
        assert family_counts('levels:3,1', 5) == [3, 1, 3, 1, 3]
        assert family_counts('levels:1', 3) == [1, 1, 1]

    def test_height_zero(self):
        assert family_counts('nary:3', 0) == []

    @pytest.mark.parametrize("family", ['nary', 'nary:2,3', 'levels:', 'tree:2', 'nary:x'])
    def test_malformed(self, family):
        with pytest.raises(ShapeSpecError):
            family_counts(family, 3)


class TestBenchLinear:
    """Rows and the operation bound"""

    def test_binary_heights(self, lenient_config):
        report = bench_linear('nary:2', [10, 11], config=lenient_config)
        assert report.ok
        assert [row.n for row in report.rows] == [2047, 4095]
        for row in report.rows:
            assert row.ops_ok
            assert row.ops < 5 * row.n

    def test_path_family(self, lenient_config):
        report = bench_linear('levels:1', [100, 400], config=lenient_config)
        assert report.ok
        assert [row.n for row in report.rows] == [101, 401]

    def test_single_height(self, lenient_config):
        report = bench_linear('nary:3', [5], repetitions=2, config=lenient_config)
        assert len(report.rows) == 1
        assert report.rows[0].ratio is None
        assert report.to_dict()['rows'][0]['ops_limit'] == 5 * 364

    def test_row_over_limit(self):
        assert not BenchRow(height=1, n=3, median_seconds=0.0, ops=15).ops_ok

    @pytest.mark.slow
    def test_doubling_ratio(self):
        config = get_config({'benchmark': {'repetitions': 5}})
        report = bench_linear('nary:2', range(14, 21), config=config)
        assert report.ok, report.failures
        assert report.rows[-1].n == (1 << 21) - 1

    @pytest.mark.slow
    def test_path_doubling_ratio(self):
        # paths with as many vertices as the binary trees of heights 14..20
        config = get_config({'benchmark': {'repetitions': 5}})
        heights = [2 ** (h + 1) - 2 for h in range(14, 21)]
        report = bench_linear('levels:1', heights, config=config)
        assert report.ok, report.failures
        assert [row.n for row in report.rows] == [2 ** (h + 1) - 1 for h in range(14, 21)]
        assert all(row.ratio is not None for row in report.rows[1:])
