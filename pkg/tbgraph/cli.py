# Copyright 2025 The tbgraph Authors. All rights reserved.
import argparse
import json
import logging
import sys

from .census import TBCensus
from .configs import CENSUS_CONFIGS, tb_shared_cfg
from .modules.automorphism import is_edge_transitive, transitivity_profile
from .modules.cycles import cycle_spectrum
from .modules.front import FrontData, fit_front_data, random_front_data, verify_proportionality
from .modules.graph import Graph, graph_stats, named_graph, parse_named_spec
from .modules.graph6 import Graph6Error, encode_graph6, parse_graph6
from .modules.operations import add_pendant, clique_sum_vertex, disjoint_union, path_join
from .modules.symmetry import classify, rho_from_cycle_counts
from .utils.utils import dump_json, format_rational, parse_rational, str2bool, use_color

__all__ = ['dispatch', 'resolve_graph']

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_STATUS_COLORS = {
    'tb-symmetrical': '32',
    'almost-tb-symmetrical-only': '33',
    'almost-tb-symmetrical': '33',
    'neither': '31',
    'trivial': '36',
}


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def resolve_graph(text: str) -> Graph:
    """A named-graph spec ("K5", "K3,3", "petersen", ...), else a graph6 string."""
    try:
        return named_graph(parse_named_spec(text))
    except ValueError:
        pass
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise ValueError(f"{text!r} is neither a graph spec nor valid graph6 ({exc})") from exc


def _g6(g):
    return encode_graph6(g).decode('ascii')


def _paint(text, status):
    if not use_color() or status not in _STATUS_COLORS:
        return text
    return f"\033[{_STATUS_COLORS[status]}m{text}\033[0m"


def _graph_json(g):
    stats = graph_stats(g)
    return {
        'n': g.n,
        'm': g.m,
        'graph6': _g6(g),
        'edges': [list(e) for e in g.edges],
        'stats': {
            'connected': stats.connected,
            'min_degree': stats.min_degree,
            'max_degree': stats.max_degree,
            'has_pendant': stats.has_pendant,
        },
        'cycle_spectrum': {str(r): c for r, c in cycle_spectrum(g).items()},
    }


#------------------------ subcommands ------------------------#

def _run_named(args):
    g = named_graph(parse_named_spec(args.spec))
    if args.json:
        dump_json(_graph_json(g))
    elif args.g6:
        print(_g6(g))
    else:
        print(f"{args.spec}: n={g.n} m={g.m} graph6={_g6(g)}")
        print("cycle spectrum: " + ', '.join(f"c{r}={c}" for r, c in cycle_spectrum(g).items()))
    return EXIT_OK


def _run_classify(args):
    g = resolve_graph(args.graph) if args.graph is not None else parse_graph6(args.g6)
    report = classify(g, full_check=not args.almost_only)
    if args.json:
        payload = report.to_json(_g6(g))
        lengths = report.cycle_lengths
        if lengths and g.n <= tb_shared_cfg.max_automorphism_vertices and is_edge_transitive(g):
            payload['edge_transitive_rho'] = [
                [r, lengths[0], format_rational(rho_from_cycle_counts(report.cycle_counts, r, lengths[0]))]
                for r in lengths[1:]
            ]
        else:
            payload['edge_transitive_rho'] = None
        dump_json(payload)
        return EXIT_OK

    print(f"graph6: {_g6(g)}  n={g.n} m={g.m}")
    print(f"cycle lengths: {report.cycle_lengths}")
    overall = report.overall.value
    print(f"overall: {_paint(overall, overall)}")
    if report.label_note:
        print(f"note: {report.label_note}")
    for r, s, rho in report.rho_table():
        print(f"  rho_{r},{s} = {format_rational(rho)}")
    for (r, s), status in report.pair_statuses.items():
        if not status.level.passed and status.witness is not None:
            w = status.witness
            print(f"  ({r},{s}) {status.level.value}: {w.kind} {list(w.edges)} "
                  f"counts {w.r_count} vs {w.s_count}")
    return EXIT_OK


def _run_census(args):
    config = CENSUS_CONFIGS[args.config]
    overrides = {}
    if args.nmax is not None:
        overrides['n_max'] = args.nmax
    if args.full_check is not None:
        overrides['full_check'] = args.full_check
    if args.keep_trivial:
        overrides['skip_single_cycle_length'] = False
    census = TBCensus(config, workers=args.workers, progress=args.progress, **overrides)

    def emit(record):
        if args.json:
            dump_json(record.to_json(), lines=True)

    if args.generate:
        summary = census.run(census.generated_lines(), emit=emit)
    else:
        with open(args.input, 'r', encoding='ascii', errors='replace') as f:
            summary = census.run(f, emit=emit)

    if args.json:
        dump_json(summary.to_json(), lines=True)
    else:
        print("n   " + ' '.join(f"{c:>12}" for c in summary.totals))
        for n, row in summary.counts.items():
            print(f"{n:<3} " + ' '.join(f"{k:>12}" for k in row.values()))
        print("survivors:")
        for graph6 in summary.survivors:
            label = summary.families.get(graph6) or '?'
            tag = ' (almost-only)' if graph6 in summary.almost_only else ''
            print(f"  {graph6}  {label}{tag}")
        if summary.notation_note:
            print(f"note: {summary.notation_note}")
        if summary.two_arc_counterexamples:
            print(f"2-arc transitive but neither: {summary.two_arc_counterexamples}")
    return EXIT_DATA if summary.parse_errors else EXIT_OK


def _run_arcs(args):
    g = resolve_graph(args.graph)
    profile = transitivity_profile(g, args.smax)
    if args.json:
        dump_json(profile.to_json())
        return EXIT_OK
    print(f"|Aut| = {profile.group_order}")
    print(f"vertex-transitive: {profile.vertex_transitive}")
    print(f"edge-transitive: {profile.edge_transitive}")
    for s, ok in profile.per_s.items():
        vacuous = ' (vacuous)' if s in profile.vacuous else ''
        print(f"  {s}-arc transitive: {ok}{vacuous}")
    return EXIT_OK


def _run_tb(args):
    g = resolve_graph(args.graph)
    if args.data is not None:
        with open(args.data, 'r', encoding='utf-8') as f:
            data = FrontData.from_json(json.load(f), g)
    else:
        data = random_front_data(g, args.random_seed, args.bound)
    check = verify_proportionality(g, data, classify(g))
    if args.json:
        payload = check.spectrum.to_json()
        if args.verify:
            payload['verification'] = check.to_json()
        dump_json(payload)
        return EXIT_OK
    for r, value in check.spectrum.per_length.items():
        print(f"TB_{r} = {format_rational(value)}")
    print(f"TB = {format_rational(check.spectrum.total)}")
    if args.verify:
        for c in check.pair_checks:
            print(f"  TB_{c.r} = {format_rational(c.rho)} * TB_{c.s}: "
                  f"{format_rational(c.lhs)} vs {format_rational(c.rhs)} "
                  f"[{c.level.value}] {'ok' if c.ok else 'MISMATCH'}")
        if check.total_check is not None:
            t = check.total_check
            print(f"  TB = {format_rational(t.coefficient)} * TB_{t.s}: {'ok' if t.ok else 'MISMATCH'}")
    return EXIT_OK


def _load_targets(path):
    with open(path, 'r', encoding='utf-8') as f:
        payload = json.load(f)
    if isinstance(payload, dict):
        payload = payload.get('targets', [])
    targets = {}
    for item in payload:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
            raise ValueError(f"target entries must be [[v0, v1, ...], value], got {item!r}")
        targets[tuple(int(v) for v in item[0])] = parse_rational(item[1])
    return targets


def _run_fit(args):
    g = resolve_graph(args.graph)
    result = fit_front_data(g, _load_targets(args.targets))
    if args.json:
        dump_json(result.to_json())
        return EXIT_OK
    if result.feasible:
        print(f"feasible (integral={result.integral})")
        dump_json(result.data.to_json())
    else:
        print("infeasible; certificate (sum y_c tb(c) = 0 for every front):")
        for c, y in sorted(result.certificate.items()):
            print(f"  {c}: {format_rational(y)}")
        print(f"  sum y_c target(c) = {format_rational(result.residual)}")
    return EXIT_OK


def _run_ops(args):
    g1 = resolve_graph(args.graph)
    if args.op == 'pendant':
        g = add_pendant(g1, args.v1)
    else:
        g2 = resolve_graph(args.other)
        if args.op == 'union':
            g = disjoint_union(g1, g2)
        elif args.op == 'cliquesum':
            g = clique_sum_vertex(g1, args.v1, g2, args.v2)
        else:
            g = path_join(g1, args.v1, g2, args.v2, args.k)
    if args.json:
        dump_json(_graph_json(g))
    else:
        print(_g6(g))
    return EXIT_OK


_HANDLERS = {
    'named': _run_named,
    'classify': _run_classify,
    'census': _run_census,
    'arcs': _run_arcs,
    'tb': _run_tb,
    'fit': _run_fit,
    'ops': _run_ops,
}


#------------------------ argument parsing ------------------------#

def _parse_args(argv=None):
    parser = _Parser(
        prog='tbgraph',
        description="(Almost-)TB-symmetry of finite simple graphs")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log progress to stderr (-v info, -vv debug).")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    p = sub.add_parser('named', help="Build a named graph.")
    p.add_argument("spec", type=str, help="K5, K3,3, K2,2,2, C7, Q3, O3, petersen, heawood, ...")
    p.add_argument("--g6", action="store_true", default=False, help="Print graph6 only.")
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('classify', help="Decide (almost-)TB-symmetry.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", type=str, default=None)
    source.add_argument("--g6", type=str, default=None)
    p.add_argument(
        "--almost-only", action="store_true", default=False,
        help="Skip the oriented-pair condition.")
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('census', help="Classify a stream of graph6 lines.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="input", type=str, default=None, help="graph6 file.")
    source.add_argument(
        "--generate", action="store_true", default=False,
        help="Generate all connected graphs up to --nmax (at most "
        f"{tb_shared_cfg.max_generate_n} vertices).")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--workers", type=int, default=None, help="0 means one per CPU.")
    p.add_argument(
        "--config", type=str, default='reduced', choices=list(CENSUS_CONFIGS.keys()))
    p.add_argument("--full-check", type=str2bool, default=None)
    p.add_argument("--keep-trivial", action="store_true", default=False)
    p.add_argument("--progress", action="store_true", default=False)
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('arcs', help="s-arc transitivity profile.")
    p.add_argument("--graph", type=str, required=True)
    p.add_argument("--smax", type=int, default=tb_shared_cfg.default_arc_cap)
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('tb', help="TB spectrum of front data.")
    p.add_argument("--graph", type=str, required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", type=str, default=None, help="FrontData JSON file.")
    source.add_argument("--random-seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=tb_shared_cfg.default_front_bound)
    p.add_argument(
        "--verify", action="store_true", default=False,
        help="Also check the proportionality relations.")
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('fit', help="Fit front data to per-cycle tb targets.")
    p.add_argument("--graph", type=str, required=True)
    p.add_argument("--targets", type=str, required=True, help="JSON [[cycle, value], ...].")
    p.add_argument("--json", action="store_true", default=False)

    p = sub.add_parser('ops', help="Apply a graph operation and print graph6.")
    p.add_argument("op", choices=['pendant', 'union', 'cliquesum', 'pathjoin'])
    p.add_argument("--graph", type=str, required=True)
    p.add_argument("--other", type=str, default=None, help="Second operand.")
    p.add_argument("--v1", type=int, default=0)
    p.add_argument("--v2", type=int, default=0)
    p.add_argument("--k", type=int, default=0, help="Fresh vertices on the joining path.")
    p.add_argument("--json", action="store_true", default=False)

    args = parser.parse_args(argv)
    _validate_args(parser, args)
    return args


def _validate_args(parser, args):
    if args.command == 'census':
        if args.nmax is not None and args.nmax < 1:
            parser.error(f"--nmax must be positive, got {args.nmax}")
        if args.generate:
            n_max = args.nmax if args.nmax is not None else CENSUS_CONFIGS[args.config].n_max
            if n_max > tb_shared_cfg.max_generate_n:
                parser.error(
                    f"--generate supports n <= {tb_shared_cfg.max_generate_n}; "
                    f"pass --nmax or use --in")
            args.nmax = n_max
        if args.workers is not None and args.workers < 0:
            parser.error("--workers must be nonnegative")
    if args.command == 'arcs' and args.smax < 0:
        parser.error("--smax must be nonnegative")
    if args.command == 'tb' and args.bound < 0:
        parser.error("--bound must be nonnegative")
    if args.command == 'ops':
        if args.op != 'pendant' and args.other is None:
            parser.error(f"ops {args.op} needs --other")
        if args.k < 0:
            parser.error("--k must be nonnegative")


def _init_logging(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="[%(asctime)s] %(levelname)s: %(message)s",
        handlers=[logging.StreamHandler(stream=sys.stderr)],
        force=True)


def dispatch(argv=None) -> int:
    """Runs one CLI invocation and returns its exit code."""
    try:
        args = _parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _init_logging(args.verbose)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError, OverflowError) as exc:
        logging.error(f"tbgraph {args.command}: {exc}")
        return EXIT_DATA


def main():
    sys.exit(dispatch())
