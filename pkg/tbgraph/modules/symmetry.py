# Copyright 2025 The tbgraph Authors. All rights reserved.
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import networkx as nx
import numpy as np

from ..configs import tb_shared_cfg
from ..utils.utils import format_rational
from .cycles import IncidenceProfile, incidence_profile
from .graph import Graph, NamedGraphSpec, named_graph

__all__ = [
    'Level',
    'Overall',
    'PairStatus',
    'SymmetryReport',
    'Witness',
    'check_pair',
    'classify',
    'label_note',
    'rho_closed_form',
    'rho_from_cycle_counts',
    'total_tb_closed_form',
    'total_tb_coefficient',
]


class Level(str, Enum):
    TRIVIAL = 'trivial-no-cycles'
    ALMOST = 'almost'
    FULL = 'full'
    FAIL_EDGE = 'fail-condition-1'
    FAIL_CORNER = 'fail-condition-2'
    FAIL_PAIR = 'fail-condition-3'

    @property
    def passed(self) -> bool:
        return self in (Level.TRIVIAL, Level.ALMOST, Level.FULL)

    @property
    def almost(self) -> bool:
        """Conditions (1)-(2) hold; a condition-(3) failure still counts."""
        return self not in (Level.FAIL_EDGE, Level.FAIL_CORNER)


class Overall(str, Enum):
    TB = 'tb-symmetrical'
    ALMOST_ONLY = 'almost-tb-symmetrical-only'
    # conditions (1)-(2) hold for every pair, condition (3) was not evaluated
    ALMOST = 'almost-tb-symmetrical'
    NEITHER = 'neither'
    TRIVIAL = 'trivial'

    @property
    def at_least_almost(self) -> bool:
        return self is not Overall.NEITHER


@dataclass(frozen=True)
class Witness:
    """
    First object violating a condition. For edges and corners the counts are
    plain integers; for a non-adjacent pair r_count = (v, k) and
    s_count = (u, h), and `rho` is the ratio fixed by conditions (1)-(2).
    """
    kind: str
    edges: tuple
    r_count: int | tuple[int, int]
    s_count: int | tuple[int, int]
    rho: Fraction | None = None

    def to_json(self):
        payload = {
            'kind': self.kind,
            'edges': [list(e) for e in self.edges],
            'r_count': list(self.r_count) if isinstance(self.r_count, tuple) else self.r_count,
            's_count': list(self.s_count) if isinstance(self.s_count, tuple) else self.s_count,
        }
        if self.rho is not None:
            payload['rho'] = format_rational(self.rho)
        return payload


@dataclass(frozen=True)
class PairStatus:
    r: int
    s: int
    level: Level
    rho: Fraction | None = None
    witness: Witness | None = None

    def to_json(self):
        return {
            'r': self.r,
            's': self.s,
            'level': self.level.value,
            'rho': None if self.rho is None else format_rational(self.rho),
            'witness': None if self.witness is None else self.witness.to_json(),
        }


def _checked(values: np.ndarray, factor: int) -> np.ndarray:
    if values.size and int(np.abs(values).max()) * abs(factor) >= tb_shared_cfg.count_limit:
        raise OverflowError(
            f"count table scaled by {factor} exceeds the int64 safety limit")
    return values * factor


def _first_mismatch(r_side, s_side, rho):
    """Index of the first entry with r_side != rho * s_side, or None."""
    bad = np.flatnonzero(_checked(r_side, rho.denominator) != _checked(s_side, rho.numerator))
    return int(bad[0]) if bad.size else None


def check_pair(profile: IncidenceProfile, r: int, s: int, want_full: bool = True) -> PairStatus:
    """
    Decides almost-(r,s) (conditions 1-2) and, when `want_full`, full (r,s)
    TB-symmetry, with exact rational rho.

    rho is read off the first edge lying on an s-cycle (the first such corner
    if no edge does); every other edge, corner and non-adjacent pair must then
    agree with it.
    """
    if r == s or r < 3 or s < 3:
        raise ValueError(f"need distinct lengths r, s >= 3, got r={r}, s={s}")
    graph = profile.graph
    if profile.cycle_count(r) == 0 and profile.cycle_count(s) == 0:
        return PairStatus(r, s, Level.TRIVIAL, Fraction(0))

    edges_r, edges_s = profile.edge_array(r), profile.edge_array(s)
    corners_r, corners_s = profile.corner_array(r), profile.corner_array(s)

    rho = None
    for r_side, s_side in ((edges_r, edges_s), (corners_r, corners_s)):
        nonzero = np.flatnonzero(s_side)
        if nonzero.size:
            k = int(nonzero[0])
            rho = Fraction(int(r_side[k]), int(s_side[k]))
            break
    if rho is None:
        rho = Fraction(0)

    k = _first_mismatch(edges_r, edges_s, rho)
    if k is not None:
        witness = Witness('edge', (graph.edges[k],), int(edges_r[k]), int(edges_s[k]))
        return PairStatus(r, s, Level.FAIL_EDGE, witness=witness)
    k = _first_mismatch(corners_r, corners_s, rho)
    if k is not None:
        witness = Witness('corner', profile.corners[k], int(corners_r[k]), int(corners_s[k]))
        return PairStatus(r, s, Level.FAIL_CORNER, witness=witness)
    if not want_full:
        return PairStatus(r, s, Level.ALMOST, rho)

    oriented_r, oriented_s = profile.oriented_array(r), profile.oriented_array(s)
    diff_r = oriented_r[:, 0] - oriented_r[:, 1]
    diff_s = oriented_s[:, 0] - oriented_s[:, 1]
    k = _first_mismatch(diff_r, diff_s, rho)
    if k is not None:
        witness = Witness('pair', profile.pairs[k],
                          (int(oriented_r[k, 0]), int(oriented_r[k, 1])),
                          (int(oriented_s[k, 0]), int(oriented_s[k, 1])),
                          rho=rho)
        return PairStatus(r, s, Level.FAIL_PAIR, witness=witness)
    return PairStatus(r, s, Level.FULL, rho)


@dataclass
class SymmetryReport:
    graph: Graph
    cycle_counts: dict[int, int]
    overall: Overall
    pair_statuses: dict[tuple[int, int], PairStatus] = field(default_factory=dict)
    full_checked: bool = True
    # set when the usual published label of this graph differs from `overall`
    label_note: str | None = None

    @property
    def cycle_lengths(self) -> list[int]:
        return sorted(r for r, c in self.cycle_counts.items() if c > 0)

    def status(self, r: int, s: int) -> PairStatus:
        return self.pair_statuses[(r, s)]

    def certified_rho(self, r: int, s: int, level: Level = Level.ALMOST) -> Fraction | None:
        """
        rho_{r,s} from whichever orientation reached `level` (ALMOST accepts
        ALMOST or FULL), using rho_{r,s} = 1 / rho_{s,r} for the reverse one.
        """
        accepted = {Level.FULL} if level is Level.FULL else {Level.ALMOST, Level.FULL}
        accepted.add(Level.TRIVIAL)
        forward = self.pair_statuses.get((r, s))
        if forward is not None and forward.level in accepted:
            return forward.rho
        backward = self.pair_statuses.get((s, r))
        if backward is not None and backward.level in accepted and backward.rho:
            return 1 / backward.rho
        return None

    def rho_table(self) -> list[tuple[int, int, Fraction]]:
        """rho_{r,s0} against the shortest cycle length s0, for each other length."""
        lengths = self.cycle_lengths
        if len(lengths) < 2:
            return []
        base = lengths[0]
        table = []
        for r in lengths[1:]:
            rho = self.certified_rho(r, base)
            if rho is not None:
                table.append((r, base, rho))
        return table

    def to_json(self, graph6: str | None = None):
        return {
            'graph6': graph6,
            'cycle_lengths': self.cycle_lengths,
            'overall': self.overall.value,
            'rho': [[r, s, format_rational(rho)] for r, s, rho in self.rho_table()],
            'pairs': [st.to_json() for _, st in sorted(self.pair_statuses.items())],
            'label_note': self.label_note,
        }


def classify(g: Graph,
             full_check: bool = True,
             profile: IncidenceProfile | None = None,
             stop_early: bool = False) -> SymmetryReport:
    """
    Classifies `g` over every ordered pair of distinct lengths in 3..n.

    With `stop_early` the scan ends at the first pair of present lengths that
    fails in both orientations; the report then holds only the statuses
    computed so far.
    """
    if profile is None:
        profile = incidence_profile(g)
    lengths = profile.lengths
    statuses = {}

    failed = False
    all_full = True
    for s in lengths:
        for r in lengths:
            if r <= s:
                continue
            forward = check_pair(profile, r, s, want_full=full_check)
            backward = check_pair(profile, s, r, want_full=full_check)
            statuses[(r, s)] = forward
            statuses[(s, r)] = backward
            if not (forward.level.almost or backward.level.almost):
                failed = True
                if stop_early:
                    break
            if Level.FULL not in (forward.level, backward.level):
                all_full = False
        if failed and stop_early:
            break

    if not (failed and stop_early):
        # pairs with an absent length are settled by the counts alone
        present = set(lengths)
        for r in range(3, g.n + 1):
            for s in range(3, g.n + 1):
                if r != s and not (r in present and s in present):
                    statuses[(r, s)] = check_pair(profile, r, s, want_full=full_check)

    if len(lengths) <= 1:
        overall = Overall.TRIVIAL
    elif failed:
        overall = Overall.NEITHER
    elif not full_check:
        overall = Overall.ALMOST
    elif all_full:
        overall = Overall.TB
    else:
        overall = Overall.ALMOST_ONLY
    logging.debug(f"classified {g}: {overall.value}")
    return SymmetryReport(
        graph=g,
        cycle_counts=dict(profile.cycle_counts),
        overall=overall,
        pair_statuses=dict(sorted(statuses.items())),
        full_checked=full_check,
        label_note=label_note(g, overall) if full_check else None)


#------------------------ published labels ------------------------#

# graphs whose usual published label disagrees with the counts; the counts win
_LISTED_LABELS = (
    ('heawood', Overall.ALMOST_ONLY),
)


def label_note(g: Graph, overall: Overall) -> str | None:
    """
    A note when `g` is isomorphic to a graph whose usual published label
    differs from `overall`, else None.

    The Heawood graph is usually listed as almost-only, yet its oriented
    pair counts satisfy condition (3) for every pair of cycle lengths.
    """
    degrees = sorted(g.degrees())
    graph = None
    for name, listed in _LISTED_LABELS:
        if listed is overall:
            continue
        reference = named_graph(name)
        if (reference.n, reference.m) != (g.n, g.m) or sorted(reference.degrees()) != degrees:
            continue
        if graph is None:
            graph = g.to_networkx()
        if nx.is_isomorphic(graph, reference.to_networkx()):
            return (f"{name} is usually listed as {listed.value}; the cycle counts "
                    f"give {overall.value}")
    return None


#------------------------ closed forms ------------------------#

def rho_from_cycle_counts(cycle_counts: dict[int, int], r: int, s: int) -> Fraction:
    """r c_r / (s c_s), the value rho_{r,s} takes on edge-transitive graphs."""
    c_s = cycle_counts.get(s, 0)
    if c_s == 0:
        raise ValueError(f"no {s}-cycles")
    return Fraction(r * cycle_counts.get(r, 0), s * c_s)


def _falling(top, bottom):
    # top! / bottom!
    return Fraction(math.factorial(top), math.factorial(bottom))


def rho_closed_form(family: NamedGraphSpec, r: int, s: int) -> Fraction:
    """
    rho_{r,s} of K_n or K_{m,n} from the factorial formulas.

    For the bipartite family r and s are the actual (even) cycle lengths.
    """
    if family.family == 'complete':
        (n,) = family.params
        if not 3 <= s < r <= n:
            raise ValueError(f"need 3 <= s < r <= n, got s={s}, r={r}, n={n}")
        return _falling(n - s, n - r)
    if family.family == 'complete_bipartite':
        m, n = family.params
        if r % 2 or s % 2:
            raise ValueError(f"K{m},{n} has only even cycles, got r={r}, s={s}")
        hr, hs = r // 2, s // 2
        if not 2 <= hs < hr <= min(m, n):
            raise ValueError(
                f"need 4 <= s < r <= {2 * min(m, n)} for K{m},{n}, got s={s}, r={r}")
        return _falling(n - hs, n - hr) * _falling(m - hs, m - hr)
    raise ValueError(f"no closed form for family {family.family}")


def total_tb_closed_form(family: NamedGraphSpec) -> tuple[int, Fraction]:
    """
    (s, coefficient) with TB = coefficient * TB_s: s = 3 for K_n and s = 4 for
    K_{m,n}.
    """
    if family.family == 'complete':
        (n,) = family.params
        return 3, sum((_falling(n - 3, n - r) for r in range(3, n + 1)), Fraction(0))
    if family.family == 'complete_bipartite':
        m, n = family.params
        return 4, sum((_falling(m - 2, m - r) * _falling(n - 2, n - r)
                       for r in range(2, min(m, n) + 1)), Fraction(0))
    raise ValueError(f"no closed form for family {family.family}")


def total_tb_coefficient(report: SymmetryReport, s: int) -> Fraction:
    """1 + sum over r != s of rho_{r,s}, valid when the graph is TB-symmetrical."""
    if report.overall not in (Overall.TB, Overall.TRIVIAL):
        raise ValueError(f"graph is {report.overall.value}, not TB-symmetrical")
    if report.cycle_counts.get(s, 0) == 0:
        raise ValueError(f"graph has no {s}-cycle")
    total = Fraction(1)
    for r in report.cycle_lengths:
        if r == s:
            continue
        rho = report.certified_rho(r, s, level=Level.FULL)
        assert rho is not None, f"pair ({r}, {s}) not certified on a TB-symmetrical report"
        total += rho
    return total
