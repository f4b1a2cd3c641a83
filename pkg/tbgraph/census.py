# Copyright 2025 The tbgraph Authors. All rights reserved.
import logging
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Iterable, Iterator

import networkx as nx
from tqdm import tqdm

from .configs import CENSUS_CONFIGS
from .distributed.util import get_world_size, ordered_map
from .modules.automorphism import is_s_arc_transitive
from .modules.cycles import incidence_profile
from .modules.generation import generate_graphs
from .modules.graph import Graph, graph_stats, named_graph
from .modules.graph6 import Graph6Error, encode_graph6, parse_graph6
from .modules.operations import clique_sum_vertex, path_join
from .modules.symmetry import Overall, classify
from .utils.utils import format_rational

__all__ = [
    'CensusOptions',
    'CensusRecord',
    'CensusSummary',
    'TBCensus',
    'census_stream',
    'match_family',
    'summarize',
]

# record statuses beyond the classification outcomes
FILTERED = 'filtered'
PARSE_ERROR = 'parse-error'

CATEGORIES = ('full', 'almost-only', 'trivial', 'fail', FILTERED, PARSE_ERROR)
_CATEGORY_OF = {
    Overall.TB.value: 'full',
    Overall.ALMOST_ONLY.value: 'almost-only',
    Overall.ALMOST.value: 'almost-only',
    Overall.TRIVIAL.value: 'trivial',
    Overall.NEITHER.value: 'fail',
    FILTERED: FILTERED,
    PARSE_ERROR: PARSE_ERROR,
}
_SURVIVOR_STATUSES = (Overall.TB.value, Overall.ALMOST_ONLY.value, Overall.ALMOST.value)

JOIN_NOTATION_NOTE = (
    "the K4 join family found consists of the 1-clique sum of two K4 and path "
    "joins of two K4 through k = 0, 1, ... fresh vertices (7, 8, 9, ... vertices); "
    "a double join of two K4 read literally would have 10 vertices, outside the census")


@dataclass(frozen=True)
class CensusOptions:
    require_connected: bool = True
    require_min_degree_2: bool = True
    skip_single_cycle_length: bool = True
    full_check: bool = True
    n_max: int = 9
    check_two_arc: bool = True

    @classmethod
    def from_config(cls, config) -> 'CensusOptions':
        return cls(
            require_connected=config.require_connected,
            require_min_degree_2=config.require_min_degree_2,
            skip_single_cycle_length=config.skip_single_cycle_length,
            full_check=config.full_check,
            n_max=config.n_max,
            check_two_arc=config.check_two_arc)


@dataclass
class CensusRecord:
    graph6: str
    status: str
    n: int | None = None
    m: int | None = None
    cycle_lengths: list[int] = field(default_factory=list)
    rho_table: list[tuple[int, int, object]] = field(default_factory=list)
    matched_family: str | None = None
    family_member: str | None = None
    # None when not checked (non-regular graphs cannot be 2-arc transitive)
    two_arc_transitive: bool | None = None
    error: str | None = None
    line_no: int | None = None

    @property
    def category(self) -> str:
        return _CATEGORY_OF[self.status]

    @property
    def survivor(self) -> bool:
        return self.status in _SURVIVOR_STATUSES

    def emitted(self, options: CensusOptions) -> bool:
        if self.status == PARSE_ERROR or self.survivor:
            return True
        return self.status == Overall.TRIVIAL.value and not options.skip_single_cycle_length

    def to_json(self):
        return {
            'graph6': self.graph6,
            'status': self.status,
            'n': self.n,
            'm': self.m,
            'cycle_lengths': self.cycle_lengths,
            'rho_table': [[r, s, format_rational(rho)] for r, s, rho in self.rho_table],
            'matched_family': self.matched_family,
            'family_member': self.family_member,
            'two_arc_transitive': self.two_arc_transitive,
            'error': self.error,
            'line_no': self.line_no,
        }


#------------------------ family recognition ------------------------#

def _family_candidates(n):
    k4 = named_graph('K4')
    yield 'complete', f"K{n}", named_graph(f"K{n}")
    for a in range(1, n // 2 + 1):
        yield 'complete-bipartite', f"K{a},{n - a}", named_graph(f"K{a},{n - a}")
    if n == 8:
        yield 'cube', 'Q3', named_graph('Q3')
    if n == 7:
        yield 'join', 'cliquesum(K4,K4)', clique_sum_vertex(k4, 0, k4, 0)
    if n >= 8:
        k = n - 8
        yield 'join', f"pathjoin(K4,K4,k={k})", path_join(k4, 0, k4, 0, k)


def match_family(g: Graph, status: str | None = None) -> tuple[str, str] | None:
    """(family, member label) of a recognised construction isomorphic to `g`."""
    if status == Overall.TRIVIAL.value:
        return 'trivial', 'trivial'
    if g.n < 1:
        return None
    degseq = sorted(g.degrees())
    graph = None
    for family, label, candidate in _family_candidates(g.n):
        if candidate.m != g.m or sorted(candidate.degrees()) != degseq:
            continue
        if graph is None:
            graph = g.to_networkx()
        if nx.is_isomorphic(graph, candidate.to_networkx()):
            return family, label
    return None


#------------------------ per-graph classification ------------------------#

def _two_arc_candidate(g):
    """
    Every vertex of degree >= 2 is the middle of some 2-arc, so a 2-arc
    transitive graph has one such degree. Leaves and isolated vertices may
    sit alongside when the filters let them through.
    """
    return len({d for d in g.degrees() if d >= 2}) == 1


def _classify_line(item, options: CensusOptions) -> CensusRecord:
    line_no, line = item
    text = line.strip()
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return CensusRecord(graph6=text, status=PARSE_ERROR, error=str(exc), line_no=line_no)
    graph6 = encode_graph6(g).decode('ascii')
    record = CensusRecord(graph6=graph6, status=FILTERED, n=g.n, m=g.m, line_no=line_no)
    if g.n > options.n_max:
        record.status = PARSE_ERROR
        record.error = f"n={g.n} exceeds n_max={options.n_max}"
        return record

    # rejection ladder: cheap structural filters first
    stats = graph_stats(g)
    if options.require_connected and not stats.connected:
        return record
    if options.require_min_degree_2 and stats.min_degree < 2:
        return record

    if options.check_two_arc and _two_arc_candidate(g):
        record.two_arc_transitive = is_s_arc_transitive(g, 2)

    profile = incidence_profile(g)
    record.cycle_lengths = profile.lengths
    if len(profile.lengths) <= 1:
        record.status = Overall.TRIVIAL.value
    else:
        report = classify(g, full_check=options.full_check, profile=profile, stop_early=True)
        record.status = report.overall.value
        if record.survivor:
            record.rho_table = report.rho_table()
    if record.survivor or record.status == Overall.TRIVIAL.value:
        match = match_family(g, record.status)
        if match is not None:
            record.matched_family, record.family_member = match
    return record


def _numbered(lines):
    for line_no, line in enumerate(lines, start=1):
        if line.strip():
            yield line_no, line


def classify_lines(lines: Iterable[str],
                   options: CensusOptions,
                   workers: int = 1,
                   progress: bool = False) -> Iterator[CensusRecord]:
    """A record for every non-blank input line, in input order."""
    worker = partial(_classify_line, options=options)
    records = ordered_map(worker, _numbered(lines), workers=workers)
    yield from tqdm(records, desc='census', unit='graph', disable=not progress)


def census_stream(lines: Iterable[str],
                  options: CensusOptions,
                  workers: int = 1) -> Iterator[CensusRecord]:
    """
    Survivor and parse-error records, in input order. Trivial records are
    included when `options.skip_single_cycle_length` is off.
    """
    for record in classify_lines(lines, options, workers=workers):
        if record.emitted(options):
            yield record


#------------------------ summary ------------------------#

@dataclass
class CensusSummary:
    # n -> category -> count; parse errors without a known n only reach `totals`
    counts: dict[int, dict[str, int]] = field(default_factory=dict)
    totals: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CATEGORIES})
    survivors: list[str] = field(default_factory=list)
    families: dict[str, str | None] = field(default_factory=dict)
    almost_only: list[str] = field(default_factory=list)
    join_family: list[str] = field(default_factory=list)
    notation_note: str | None = None
    two_arc: list[str] = field(default_factory=list)
    two_arc_counterexamples: list[str] = field(default_factory=list)

    @property
    def parse_errors(self) -> int:
        return self.totals[PARSE_ERROR]

    def to_json(self):
        return {
            'summary': True,
            'counts': {str(n): dict(c) for n, c in sorted(self.counts.items())},
            'totals': dict(self.totals),
            'survivors': self.survivors,
            'families': dict(self.families),
            'almost_only': self.almost_only,
            'join_family': self.join_family,
            'notation_note': self.notation_note,
            'two_arc': self.two_arc,
            'two_arc_counterexamples': self.two_arc_counterexamples,
        }


def summarize(records: Iterable[CensusRecord]) -> CensusSummary:
    """
    Per-n counts by category plus the nontrivial survivor set. Counts have
    multiset semantics; survivor and 2-arc lists are sets, sorted.
    """
    summary = CensusSummary()
    survivors, almost_only, joins, two_arc, counter = set(), set(), set(), set(), set()
    for record in records:
        category = record.category
        summary.totals[category] += 1
        if record.n is not None:
            row = summary.counts.setdefault(record.n, {c: 0 for c in CATEGORIES})
            row[category] += 1
        if record.survivor:
            survivors.add(record.graph6)
            summary.families[record.graph6] = record.family_member
            if category == 'almost-only':
                almost_only.add(record.graph6)
            if record.matched_family == 'join':
                joins.add(record.family_member)
        if record.two_arc_transitive:
            two_arc.add(record.graph6)
            if record.status == Overall.NEITHER.value:
                counter.add(record.graph6)
    summary.counts = dict(sorted(summary.counts.items()))
    summary.families = dict(sorted(summary.families.items()))
    summary.survivors = sorted(survivors)
    summary.almost_only = sorted(almost_only)
    summary.join_family = sorted(joins)
    summary.notation_note = JOIN_NOTATION_NOTE if joins else None
    summary.two_arc = sorted(two_arc)
    summary.two_arc_counterexamples = sorted(counter)
    return summary


#------------------------ pipeline ------------------------#

class TBCensus:

    def __init__(self, config=None, workers=None, progress=False, **overrides):
        r"""
        Streams graphs through the TB-symmetry classification.

        Args:
            config (EasyDict, *optional*, defaults to `CENSUS_CONFIGS['reduced']`):
                Census preset from `tbgraph.configs`.
            workers (`int`, *optional*):
                Worker processes; 0 means one per CPU. Defaults to the config.
            progress (`bool`, *optional*, defaults to False):
                Show tqdm progress bars on stderr.
            overrides:
                CensusOptions fields replacing the preset values.
        """
        self.config = CENSUS_CONFIGS['reduced'] if config is None else config
        options = CensusOptions.from_config(self.config)
        if overrides:
            options = replace(options, **overrides)
        self.options = options
        self.workers = self.config.num_workers if workers is None else workers
        self.progress = progress

    def generated_lines(self, n_min: int = 1) -> Iterator[str]:
        """graph6 lines of every connected graph on n_min..n_max vertices."""
        for n in range(n_min, self.options.n_max + 1):
            for g in generate_graphs(n, progress=self.progress):
                yield encode_graph6(g).decode('ascii')

    def run(self, lines: Iterable[str], emit=None) -> CensusSummary:
        """
        Classifies every line and returns the summary; `emit` is called with
        each record that `census_stream` would yield, in input order.
        """
        logging.info(f"census with {self.options} on "
                     f"{get_world_size(self.workers)} worker(s)")
        records = []
        for record in classify_lines(lines, self.options, workers=self.workers,
                                     progress=self.progress):
            if record.status == PARSE_ERROR:
                logging.warning(f"line {record.line_no}: {record.error}")
            records.append(record)
            if emit is not None and record.emitted(self.options):
                emit(record)
        summary = summarize(records)
        for n, row in summary.counts.items():
            logging.info(f"n={n}: " + ', '.join(f"{c}={k}" for c, k in row.items() if k))
        logging.info(f"census finished: {len(summary.survivors)} nontrivial survivors")
        return summary
