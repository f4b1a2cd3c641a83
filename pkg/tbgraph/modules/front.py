# Copyright 2025 The tbgraph Authors. All rights reserved.
"""
Abstract front-projection data for a Legendrian embedding of a graph.

A front is reduced to the totals the writhe/cusp decomposition needs:
signed self-crossings of each edge strand, signed crossings between the two
strands of a corner, signed crossings between two disjoint strands (stored in
the sigma = +1 relative orientation), and cusp counts on edges and at
corners. The tb of a cycle is then linear in these totals.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..configs import tb_shared_cfg
from ..utils.linalg import solve_rational
from ..utils.utils import format_rational, parse_rational
from .cycles import Cycle, EdgePair, enumerate_cycles, graph_corners, non_adjacent_pairs
from .graph import Edge, Graph
from .symmetry import Level, Overall, SymmetryReport, total_tb_coefficient

__all__ = [
    'FitResult',
    'FrontData',
    'FrontDataError',
    'PairCheck',
    'ProportionalityCheck',
    'TbSpectrum',
    'TotalCheck',
    'adversarial_front_data',
    'concentrated_front_data',
    'cycle_tb',
    'fit_front_data',
    'random_front_data',
    'tb_spectrum',
    'verify_proportionality',
]

FIELDS = ('w_self', 'w_corner', 'w_cross', 'c_edge', 'c_corner')
_CUSP_FIELDS = ('c_edge', 'c_corner')


class FrontDataError(ValueError):
    pass


def _key_sets(g):
    edges = list(g.edges)
    corners = graph_corners(g)
    pairs = non_adjacent_pairs(g)
    return {
        'w_self': edges,
        'w_corner': corners,
        'w_cross': pairs,
        'c_edge': edges,
        'c_corner': corners,
    }


def _value_to_json(value):
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else format_rational(value)


def _edge_from_json(item):
    u, v = (int(x) for x in item)
    return (min(u, v), max(u, v))


@dataclass
class FrontData:
    """
    Crossing and cusp totals keyed by the edges, corners and non-adjacent
    edge pairs of one host graph. Values are integers for real fronts;
    `fit_front_data` may return rational ones.
    """
    w_self: dict[Edge, int | Fraction] = field(default_factory=dict)
    w_corner: dict[EdgePair, int | Fraction] = field(default_factory=dict)
    w_cross: dict[EdgePair, int | Fraction] = field(default_factory=dict)
    c_edge: dict[Edge, int | Fraction] = field(default_factory=dict)
    c_corner: dict[EdgePair, int | Fraction] = field(default_factory=dict)

    @classmethod
    def zeros(cls, g: Graph) -> 'FrontData':
        return cls(**{name: {k: 0 for k in keys} for name, keys in _key_sets(g).items()})

    def check_keys(self, g: Graph):
        for name, keys in _key_sets(g).items():
            have = getattr(self, name)
            if set(have) != set(keys):
                missing = sorted(set(keys) - set(have))
                extra = sorted(set(have) - set(keys))
                raise FrontDataError(
                    f"{name} keys do not match the graph: missing {missing[:3]}, "
                    f"unexpected {extra[:3]}")

    def validate(self, g: Graph):
        """
        Raises:
            FrontDataError: on mismatched keys or a negative cusp count.
        """
        self.check_keys(g)
        for name in _CUSP_FIELDS:
            for key, value in getattr(self, name).items():
                if value < 0:
                    raise FrontDataError(f"{name}[{key}] = {value} is negative")

    def __add__(self, other: 'FrontData') -> 'FrontData':
        if not isinstance(other, FrontData):
            return NotImplemented
        summed = {}
        for name in FIELDS:
            mine, theirs = getattr(self, name), getattr(other, name)
            if set(mine) != set(theirs):
                raise FrontDataError(f"cannot add front data with different {name} keys")
            summed[name] = {k: mine[k] + theirs[k] for k in mine}
        return FrontData(**summed)

    def is_integral(self) -> bool:
        """Integer crossing totals and nonnegative integer cusp counts."""
        for name in FIELDS:
            for value in getattr(self, name).values():
                if Fraction(value).denominator != 1:
                    return False
                if name in _CUSP_FIELDS and value < 0:
                    return False
        return True

    def to_json(self):
        payload = {}
        for name in ('w_self', 'c_edge'):
            payload[name] = [[list(e), _value_to_json(v)]
                             for e, v in sorted(getattr(self, name).items())]
        for name in ('w_corner', 'w_cross', 'c_corner'):
            payload[name] = [[list(e), list(f), _value_to_json(v)]
                             for (e, f), v in sorted(getattr(self, name).items())]
        return payload

    @classmethod
    def from_json(cls, payload, g: Graph | None = None) -> 'FrontData':
        """Inverse of `to_json`; validated against `g` when given."""
        try:
            data = {}
            for name in ('w_self', 'c_edge'):
                data[name] = {_edge_from_json(e): parse_rational(v)
                              for e, v in payload.get(name, [])}
            for name in ('w_corner', 'w_cross', 'c_corner'):
                data[name] = {tuple(sorted((_edge_from_json(e), _edge_from_json(f)))):
                              parse_rational(v)
                              for e, f, v in payload.get(name, [])}
        except (TypeError, ValueError) as exc:
            raise FrontDataError(f"malformed front data: {exc}") from exc
        for name, values in data.items():
            data[name] = {k: int(v) if v.denominator == 1 else v for k, v in values.items()}
        front = cls(**data)
        if g is not None:
            front.validate(g)
        return front


@dataclass
class TbSpectrum:
    per_length: dict[int, Fraction]
    total: Fraction

    def __post_init__(self):
        assert self.total == sum(self.per_length.values(), Fraction(0))

    def __getitem__(self, r: int) -> Fraction:
        return self.per_length.get(r, Fraction(0))

    def to_json(self):
        return {
            'per_length': {str(r): format_rational(v) for r, v in self.per_length.items()},
            'total': format_rational(self.total),
        }


#------------------------ tb of cycles ------------------------#

def _as_cycle(g, c):
    cycle = c if isinstance(c, Cycle) else Cycle.from_sequence(c)
    for e in cycle.edges:
        if e not in g.edge_index:
            raise FrontDataError(f"{cycle} is not a cycle of the graph: missing edge {e}")
    return cycle


def _cycle_tb(d, cycle):
    vs = cycle.vertices
    steps = list(zip(vs, vs[1:] + vs[:1]))
    edges = [(min(a, b), max(a, b)) for a, b in steps]
    signs = [1 if a < b else -1 for a, b in steps]
    r = len(edges)

    writhe = 0
    cusps = 0
    try:
        for i, e in enumerate(edges):
            writhe += d.w_self[e]
            cusps += d.c_edge[e]
            corner = tuple(sorted((e, edges[(i + 1) % r])))
            writhe += d.w_corner[corner]
            cusps += d.c_corner[corner]
            for j in range(i + 2, r):
                f = edges[j]
                if set(e) & set(f):
                    continue
                pair = tuple(sorted((e, f)))
                writhe += signs[i] * signs[j] * d.w_cross[pair]
    except KeyError as exc:
        raise FrontDataError(f"front data has no entry for {exc.args[0]}") from exc
    return Fraction(writhe) - Fraction(cusps, 2)


def cycle_tb(g: Graph, d: FrontData, c: Cycle | Sequence[int]) -> Fraction:
    """
    tb = w - c/2 of one cycle, from the decomposition of its writhe over
    edges, corners and non-adjacent edge pairs. Independent of the direction
    in which `c` is traversed.
    """
    d.check_keys(g)
    return _cycle_tb(d, _as_cycle(g, c))


def tb_spectrum(g: Graph, d: FrontData, cycles: list[Cycle] | None = None) -> TbSpectrum:
    d.check_keys(g)
    if cycles is None:
        cycles = enumerate_cycles(g)
    per_length = {}
    for c in cycles:
        per_length[c.length] = per_length.get(c.length, Fraction(0)) + _cycle_tb(d, c)
    per_length = dict(sorted(per_length.items()))
    return TbSpectrum(per_length, sum(per_length.values(), Fraction(0)))


#------------------------ front data generators ------------------------#

def random_front_data(g: Graph, seed: int, bound: int | None = None) -> FrontData:
    """
    Seeded integer front data: crossing totals uniform in [-bound, bound] and
    cusp counts uniform in [0, 2 * bound].
    """
    if bound is None:
        bound = tb_shared_cfg.default_front_bound
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    rng = np.random.default_rng(seed)
    data = {}
    for name, keys in _key_sets(g).items():
        low, high = (0, 2 * bound) if name in _CUSP_FIELDS else (-bound, bound)
        values = rng.integers(low, high, size=len(keys), endpoint=True)
        data[name] = {k: int(v) for k, v in zip(keys, values)}
    return FrontData(**data)


def concentrated_front_data(g: Graph, pair: EdgePair, weight: int = 1) -> FrontData:
    """Zero data except w_cross = `weight` on one non-adjacent edge pair."""
    d = FrontData.zeros(g)
    key = tuple(sorted(tuple(sorted(e)) for e in pair))
    if key not in d.w_cross:
        raise FrontDataError(f"{pair} is not a pair of non-adjacent edges of the graph")
    d.w_cross[key] = weight
    return d


def adversarial_front_data(g: Graph, report: SymmetryReport) -> tuple[FrontData, tuple[int, int]]:
    """
    Front data breaking TB_r = rho * TB_s on an almost-symmetric pair that
    fails the oriented-pair condition: all crossing weight sits on the
    witness pair.

    Returns the data and the (r, s) pair it targets.
    """
    for (r, s), status in report.pair_statuses.items():
        if status.level is Level.FAIL_PAIR:
            return concentrated_front_data(g, status.witness.edges), (r, s)
    raise ValueError(f"{g} has no pair failing only the oriented-pair condition")


#------------------------ proportionality ------------------------#

@dataclass(frozen=True)
class PairCheck:
    r: int
    s: int
    level: Level
    rho: Fraction
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self):
        return {
            'r': self.r,
            's': self.s,
            'level': self.level.value,
            'rho': format_rational(self.rho),
            'lhs': format_rational(self.lhs),
            'rhs': format_rational(self.rhs),
            'ok': self.ok,
        }


@dataclass(frozen=True)
class TotalCheck:
    s: int
    coefficient: Fraction
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self):
        return {
            's': self.s,
            'coefficient': format_rational(self.coefficient),
            'lhs': format_rational(self.lhs),
            'rhs': format_rational(self.rhs),
            'ok': self.ok,
        }


@dataclass
class ProportionalityCheck:
    spectrum: TbSpectrum
    pair_checks: list[PairCheck] = field(default_factory=list)
    total_check: TotalCheck | None = None

    @property
    def certified_ok(self) -> bool:
        """Every comparison the classification guarantees came out equal."""
        full = all(c.ok for c in self.pair_checks if c.level is Level.FULL)
        return full and (self.total_check is None or self.total_check.ok)

    def to_json(self):
        return {
            'spectrum': self.spectrum.to_json(),
            'pair_checks': [c.to_json() for c in self.pair_checks],
            'total_check': None if self.total_check is None else self.total_check.to_json(),
        }


def verify_proportionality(g: Graph,
                           d: FrontData,
                           report: SymmetryReport,
                           s: int | None = None) -> ProportionalityCheck:
    """
    Compares TB_r with rho_{r,s} TB_s for every pair of present lengths that
    carries a ratio, and the total TB with (1 + sum rho) TB_s on
    TB-symmetrical graphs.

    Pairs failing only the oriented-pair condition are compared with the
    ratio fixed by conditions (1)-(2); mismatches there are expected.
    Failures are recorded, never raised.
    """
    spectrum = tb_spectrum(g, d)
    present = set(report.cycle_lengths)
    checks = []
    for (r, t), status in report.pair_statuses.items():
        if r not in present or t not in present:
            continue
        if status.level in (Level.ALMOST, Level.FULL):
            rho = status.rho
        elif status.level is Level.FAIL_PAIR:
            rho = status.witness.rho
        else:
            continue
        checks.append(PairCheck(r, t, status.level, rho, spectrum[r], rho * spectrum[t]))

    total = None
    if report.overall in (Overall.TB, Overall.TRIVIAL) and present:
        if s is None:
            s = min(present)
        elif s not in present:
            raise ValueError(f"graph has no {s}-cycle")
        coefficient = total_tb_coefficient(report, s)
        total = TotalCheck(s, coefficient, spectrum.total, coefficient * spectrum[s])

    result = ProportionalityCheck(spectrum, checks, total)
    if not result.certified_ok:
        logging.warning(f"proportionality violated on certified pairs of {g}")
    return result


#------------------------ fitting ------------------------#

@dataclass
class FitResult:
    """
    Either a front data solution reproducing every target, or a certificate:
    multipliers y over the target cycles with sum y_c tb(c) = 0 for all front
    data, while sum y_c target(c) != 0.
    """
    feasible: bool
    data: FrontData | None = None
    certificate: dict[Cycle, Fraction] | None = None
    # solution has integer crossings and nonnegative integer cusps
    integral: bool = False
    residual: Fraction | None = None

    def to_json(self):
        return {
            'feasible': self.feasible,
            'integral': self.integral,
            'data': None if self.data is None else self.data.to_json(),
            'certificate': None if self.certificate is None else [
                [list(c.vertices), format_rational(y)]
                for c, y in sorted(self.certificate.items())],
            'residual': None if self.residual is None else format_rational(self.residual),
        }


def _variables(g):
    return [(name, key) for name, keys in _key_sets(g).items() for key in keys]


def _unit(g, name, key):
    d = FrontData.zeros(g)
    getattr(d, name)[key] = 1
    return d


def fit_front_data(g: Graph, targets: dict[Cycle | Sequence[int], Fraction | int]) -> FitResult:
    """
    Solves cycle_tb(g, d, c) = targets[c] exactly over all front data
    variables (cusps relaxed to rationals).

    Raises:
        FrontDataError: when a target key is not a cycle of `g`.
    """
    keyed = {}
    for c, value in targets.items():
        keyed[_as_cycle(g, c)] = parse_rational(value)
    cycles = sorted(keyed)
    variables = _variables(g)

    # tb is linear: column j holds tb of every target cycle under the unit vector e_j
    columns = []
    for name, key in variables:
        unit = _unit(g, name, key)
        columns.append([_cycle_tb(unit, c) for c in cycles])
    a = [[columns[j][i] for j in range(len(variables))] for i in range(len(cycles))]
    b = [keyed[c] for c in cycles]

    solved = solve_rational(a, b)
    logging.info(f"fit over {len(variables)} variables and {len(cycles)} cycles: "
                 f"rank {solved.rank}, feasible={solved.feasible}")
    if not solved.feasible:
        certificate = {c: y for c, y in zip(cycles, solved.certificate) if y != 0}
        residual = sum((y * keyed[c] for c, y in certificate.items()), Fraction(0))
        assert residual != 0
        return FitResult(False, certificate=certificate, residual=residual)

    d = FrontData.zeros(g)
    for (name, key), value in zip(variables, solved.solution):
        getattr(d, name)[key] = int(value) if value.denominator == 1 else value
    for c in cycles:
        assert _cycle_tb(d, c) == keyed[c], f"fit does not reproduce the target on {c}"
    return FitResult(True, data=d, integral=d.is_integral())
