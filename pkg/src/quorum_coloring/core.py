#!/usr/bin/env python3
"""
Core QuorumAnalyzer class

Each method runs one solver or check and returns a result record (a plain dict
ready for io_formats.emit_result).
"""

import logging
import time
from typing import Any, Dict, List, Optional, Union

from .bounds import bound_theorem1, closed_form_perfect_binary
from .coloring import (
    Coloring,
    Graph,
    check_class_connectivity,
    check_corollaries,
    is_cost_effective,
    verify_quorum,
)
from .config import Config, get_config
from .exceptions import NoExactMethodError
from .methods import select_exact_method
from .oracles import brute_force_graph_witness, brute_force_tree
from .refiner import algo1_refine
from .solver import algo2_solve
from .tree_core import RootedTree, classify_shape

logger = logging.getLogger(__name__)


def _instance(tree: RootedTree) -> Dict[str, Any]:
    return {'n': tree.n, 'shape': classify_shape(tree).to_dict()}


class QuorumAnalyzer:
    """
    Main orchestrator for quorum coloring analysis.

    Usage:
        analyzer = QuorumAnalyzer()
        report = analyzer.run(tree)
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or get_config()

    def solve(self, tree: RootedTree, witness: bool = False, trace: bool = False) -> Dict[str, Any]:
        """ψ_q of a perfect per-level tree with the linear-time solver"""
        start = time.perf_counter()
        coloring, alpha = algo2_solve(tree)
        record = {'method': 'algo2', 'psi_q': alpha.total, **_instance(tree)}
        record['elapsed_seconds'] = time.perf_counter() - start
        if witness:
            record['witness'] = coloring.to_dict()
        if trace:
            record['trace'] = alpha.to_dict()
        return record

    def refine(
        self, tree: RootedTree, coloring: Coloring, trace: bool = False
    ) -> Dict[str, Any]:
        start = time.perf_counter()
        result, steps = algo1_refine(
            tree, coloring, validate_each_iteration=self.config.validate_each_iteration
        )
        record = {
            'method': 'algo1',
            'classes_before': coloring.k,
            'classes_after': result.k,
            **_instance(tree),
            'elapsed_seconds': time.perf_counter() - start,
            'witness': result.to_dict(),
        }
        if trace:
            record['trace'] = steps.to_dict()
        return record

    def verify(self, structure: Union[RootedTree, Graph], coloring: Coloring) -> Dict[str, Any]:
        graph = structure.to_graph() if isinstance(structure, RootedTree) else structure
        report = verify_quorum(graph, coloring)
        record: Dict[str, Any] = {
            'method': 'verify',
            'n': graph.n,
            'k': coloring.k,
            'valid': report.valid,
            'violations': report.violation_lines(),
        }
        if report.valid:
            record['cost_effective'] = is_cost_effective(graph, coloring)
            record['classes_connected'] = all(check_class_connectivity(graph, coloring))
        return record

    def bound(self, tree: RootedTree) -> Dict[str, Any]:
        return {'method': 'theorem1_bound', 'value': bound_theorem1(tree), **_instance(tree)}

    def exact(self, tree: RootedTree) -> Dict[str, Any]:
        method = select_exact_method(tree)
        if method is None:
            raise NoExactMethodError(
                "No exact method applies to this tree (not perfect per level, maximum degree "
                f"{tree.max_degree}); use 'bound' for a lower bound or 'bruteforce' for small trees"
            )
        return {'method': method.name, 'psi_q': method.solve(tree), **_instance(tree)}

    def brute_force(
        self,
        structure: Union[RootedTree, Graph],
        limit: Optional[int] = None,
        witness: bool = False,
    ) -> Dict[str, Any]:
        start = time.perf_counter()
        if isinstance(structure, RootedTree):
            if limit is None:
                limit = self.config.brute_force_tree_limit
            value, coloring = brute_force_tree(structure, limit, self.config.workers)
            record: Dict[str, Any] = {
                'method': 'bruteforce_tree', 'psi_q': value, **_instance(structure)
            }
        else:
            if limit is None:
                limit = self.config.brute_force_graph_limit
            value, coloring = brute_force_graph_witness(structure, limit)
            record = {'method': 'bruteforce_graph', 'psi_q': value, 'n': structure.n}
        record['elapsed_seconds'] = time.perf_counter() - start
        if witness:
            record['witness'] = coloring.to_dict()
        return record

    def closed_form(self, height: int) -> Dict[str, Any]:
        value = closed_form_perfect_binary(height, self.config.max_closed_form_height)
        return {'method': 'closed_form', 'psi_q': value, 'height': height}

    def run(self, tree: RootedTree) -> Dict[str, Any]:
        """
        Full report for one tree: shape, exact value when some method applies, the
        lower bound, the linear-time solution with its checks, and the oracle value
        when the tree is small enough.
        """
        shape = classify_shape(tree)
        report: Dict[str, Any] = {'n': tree.n, 'height': tree.height, 'shape': shape.to_dict()}
        checks: List[Dict[str, str]] = []

        if tree.n >= 2:
            report['bound'] = bound_theorem1(tree)
        method = select_exact_method(tree)
        if method is not None:
            report['exact'] = {'method': method.name, 'psi_q': method.solve(tree)}

        if shape.is_per_level:
            coloring, alpha = algo2_solve(tree)
            graph = tree.to_graph()
            report['solve'] = {'psi_q': alpha.total, 'ops': alpha.ops.to_dict()}
            if not all(check_class_connectivity(graph, coloring)):
                checks.append({'severity': 'critical', 'message': 'a class is disconnected'})
            for violation in check_corollaries(graph, coloring):
                checks.append({'severity': 'critical', 'message': violation['message']})
            if alpha.ops.total >= 5 * tree.n:
                checks.append({
                    'severity': 'high',
                    'message': f"operation count {alpha.ops.total} is not below 5n = {5 * tree.n}",
                })

        if tree.n <= self.config.brute_force_tree_limit:
            value, _ = brute_force_tree(
                tree, self.config.brute_force_tree_limit, self.config.workers
            )
            report['bruteforce'] = value
            if 'bound' in report and report['bound'] > value:
                checks.append({
                    'severity': 'critical',
                    'message': f"bound {report['bound']} exceeds exhaustive value {value}",
                })
            if 'exact' in report and report['exact']['psi_q'] != value:
                checks.append({
                    'severity': 'critical',
                    'message': f"{report['exact']['method']} gives {report['exact']['psi_q']}, "
                               f"exhaustive search gives {value}",
                })

        report['checks'] = checks
        logger.info(f"Analyzed tree n={tree.n}: {len(checks)} failed checks")
        return report
