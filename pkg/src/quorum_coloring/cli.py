#!/usr/bin/env python3
"""
quorum-coloring command line

Results go to stdout as one JSON document per line (indented with --pretty), DOT for
export-dot. Diagnostics go to stderr; verify lists each violating vertex there as
"vertex v: same=s need=c". Exit status: 0 on success, 1 on a domain error
or a failed check, 2 on a usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Union

from . import __version__
from .bench import bench_linear
from .coloring import Coloring, Graph
from .config import get_config
from .core import QuorumAnalyzer
from .exceptions import QuorumError
from .generators import SEED_MODES, build_shape, gen_seed_coloring, parse_shape_spec
from .io_formats import (
    TREE_FORMATS,
    emit_dot,
    emit_result,
    emit_tree,
    parse_coloring,
    parse_graph,
    parse_tree,
)
from .oracles import brute_force_graph_witness
from .refiner import algo1_refine
from .solver import algo2_solve
from .tree_core import RootedTree, classify_shape

logger = logging.getLogger(__name__)


def _heights(text: str) -> List[int]:
    """'10..18' (inclusive) or '10,12,14'"""
    try:
        if '..' in text:
            lo, hi = text.split('..', 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid height range {text!r}") from None
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"invalid height range {text!r}")
    return values


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    return Path(path).read_text(encoding='utf-8')


def _load_tree(args: argparse.Namespace) -> RootedTree:
    if getattr(args, 'shape', None):
        return build_shape(parse_shape_spec(args.shape))
    path = getattr(args, 'tree', None) or '-'
    fmt = args.format
    if fmt is None:
        fmt = 'json' if path.endswith('.json') else 'parent-array'
    return parse_tree(_read(path), fmt)


def _load_structure(args: argparse.Namespace) -> Union[RootedTree, Graph]:
    if getattr(args, 'graph', None):
        return parse_graph(_read(args.graph))
    return _load_tree(args)


def _write(args: argparse.Namespace, text: str) -> None:
    if getattr(args, 'output', None):
        Path(args.output).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


def _add_tree_source(parser: argparse.ArgumentParser, graph: bool = False) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument('--tree', metavar='PATH', help="tree file ('-' for stdin, the default)")
    source.add_argument('--shape', metavar='SPEC',
                        help="generated tree: nary:N,h | levels:a,b,... | random:n,seed | "
                             "local:h,{a,b},seed")
    if graph:
        source.add_argument('--graph', metavar='PATH', help='graph JSON document')
    parser.add_argument('--format', choices=TREE_FORMATS,
                        help='tree file format (default: json for *.json, else parent-array)')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='indented JSON output')
    common.add_argument('--verbose', '-v', action='store_true', help='debug logging on stderr')
    common.add_argument('--output', '-o', metavar='PATH', help='write results to a file')

    parser = argparse.ArgumentParser(
        prog='quorum-coloring',
        description='Quorum colorings of trees: solvers, bounds, oracles and exports',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('gen', parents=[common], help='generate a tree')
    p.add_argument('--shape', required=True, metavar='SPEC')
    p.add_argument('--format', choices=TREE_FORMATS, default='parent-array')

    p = sub.add_parser('solve', parents=[common], help='linear-time solver (perfect per level)')
    _add_tree_source(p)
    p.add_argument('--witness', action='store_true', help='include the coloring')
    p.add_argument('--trace', action='store_true', help='include the per-vertex counts')

    p = sub.add_parser('refine', parents=[common], help='refine a quorum coloring')
    _add_tree_source(p)
    p.add_argument('--coloring', metavar='PATH', help='input coloring (default: generated)')
    p.add_argument('--seed-mode', choices=SEED_MODES, default='monochromatic')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--trace', action='store_true', help='include the per-iteration trace')

    p = sub.add_parser('verify', parents=[common], help='check the quorum property')
    _add_tree_source(p, graph=True)
    p.add_argument('--coloring', metavar='PATH', required=True)

    p = sub.add_parser('bound', parents=[common], help='matching lower bound')
    _add_tree_source(p)

    p = sub.add_parser('exact', parents=[common], help='exact value by the best method')
    _add_tree_source(p)

    p = sub.add_parser('bruteforce', parents=[common], help='exhaustive search (small inputs)')
    _add_tree_source(p, graph=True)
    p.add_argument('--limit', type=int, help='maximum vertex count')
    p.add_argument('--witness', action='store_true', help='include the coloring')

    p = sub.add_parser('closed-form', parents=[common], help='perfect binary tree of height h')
    p.add_argument('--height', type=int, required=True)

    p = sub.add_parser('export-dot', parents=[common], help='DOT drawing of a coloring')
    _add_tree_source(p, graph=True)
    p.add_argument('--coloring', metavar='PATH',
                   help='coloring to draw (default: solved or refined)')

    p = sub.add_parser('bench', parents=[common], help='linear scaling benchmark')
    p.add_argument('--family', required=True, metavar='FAMILY', help='nary:N or levels:a,b,...')
    p.add_argument('--heights', required=True, type=_heights, metavar='A..B')
    p.add_argument('--repetitions', type=int)

    return parser


def _default_coloring(structure: Union[RootedTree, Graph]) -> Coloring:
    if isinstance(structure, Graph):
        return brute_force_graph_witness(structure)[1]
    if classify_shape(structure).is_per_level:
        return algo2_solve(structure)[0]
    return algo1_refine(structure, Coloring.monochromatic(structure.n))[0]


def _dispatch(args: argparse.Namespace, analyzer: QuorumAnalyzer) -> int:
    pretty = args.pretty
    command = args.command

    if command == 'gen':
        _write(args, emit_tree(build_shape(parse_shape_spec(args.shape)), args.format))
        return 0

    if command == 'closed-form':
        _write(args, emit_result(analyzer.closed_form(args.height), pretty))
        return 0

    if command == 'bench':
        report = bench_linear(args.family, args.heights, args.repetitions, analyzer.config)
        if pretty:
            lines = [f"{'h':>4} {'n':>10} {'seconds':>12} {'ops':>10} {'5n':>10} {'ratio':>7}"]
            for row in report.rows:
                ratio = '-' if row.ratio is None else f"{row.ratio:.2f}"
                lines.append(
                    f"{row.height:>4} {row.n:>10} {row.median_seconds:>12.6f} "
                    f"{row.ops:>10} {5 * row.n:>10} {ratio:>7}"
                )
            _write(args, '\n'.join(lines) + '\n')
        else:
            _write(args, emit_result({'method': 'bench', **report.to_dict()}))
        for failure in report.failures:
            print(f"[ERROR] {failure}", file=sys.stderr)
        return 0 if report.ok else 1

    if command in ('verify', 'bruteforce', 'export-dot'):
        structure = _load_structure(args)
    else:
        structure = _load_tree(args)

    if command == 'solve':
        record = analyzer.solve(structure, witness=args.witness, trace=args.trace)
    elif command == 'refine':
        if args.coloring:
            coloring = parse_coloring(_read(args.coloring))
        else:
            coloring = gen_seed_coloring(structure, args.seed_mode, args.seed)
        record = analyzer.refine(structure, coloring, trace=args.trace)
    elif command == 'verify':
        record = analyzer.verify(structure, parse_coloring(_read(args.coloring)))
        _write(args, emit_result(record, pretty))
        for line in record['violations']:
            print(line, file=sys.stderr)
        return 0 if record['valid'] else 1
    elif command == 'bound':
        record = analyzer.bound(structure)
    elif command == 'exact':
        record = analyzer.exact(structure)
    elif command == 'bruteforce':
        record = analyzer.brute_force(structure, args.limit, witness=args.witness)
    else:
        coloring = (
            parse_coloring(_read(args.coloring)) if args.coloring else _default_coloring(structure)
        )
        _write(args, emit_dot(structure, coloring))
        return 0

    _write(args, emit_result(record, pretty))
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    config = get_config()
    level = logging.DEBUG if args.verbose else getattr(logging, config.log_level, logging.WARNING)
    logging.basicConfig(
        level=level, stream=sys.stderr, format='[%(levelname)s] %(name)s: %(message)s'
    )

    try:
        return _dispatch(args, QuorumAnalyzer(config))
    except QuorumError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 1


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == '__main__':
    main()
