# Copyright 2025 The tbgraph Authors. All rights reserved.
"""
Exact linear algebra over the rationals.

Gaussian elimination to reduced row echelon form on `Fraction` entries. Every
row operation is mirrored on a tracking matrix, so each reduced row is known
as an explicit combination of the original equations; an inconsistent
system therefore comes with a certificate y such that y^T A = 0 and
y^T b != 0.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

__all__ = ['LinearSolution', 'solve_rational']


@dataclass
class LinearSolution:
    rank: int
    # one particular solution (free variables set to zero), or None
    solution: list[Fraction] | None = None
    # multipliers over the equations proving inconsistency, or None
    certificate: list[Fraction] | None = None
    pivot_columns: list[int] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def _row_reduce(m, b, t):
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            b[piv_r], b[i_row] = b[i_row], b[piv_r]
            t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            m[piv_r] = [x / fp for x in m[piv_r]]
            b[piv_r] /= fp
            t[piv_r] = [x / fp for x in t[piv_r]]
        for r in range(n_rows):
            fr = m[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            m[r] = [x - fr * y for x, y in zip(m[r], m[piv_r])]
            b[r] -= fr * b[piv_r]
            t[r] = [x - fr * y for x, y in zip(t[r], t[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def solve_rational(a: Sequence[Sequence], b: Sequence) -> LinearSolution:
    """
    Solves A x = b exactly.

    Args:
        a: rows of the coefficient matrix (ints or Fractions).
        b: right-hand side, one entry per row.
    """
    n_rows = len(a)
    assert len(b) == n_rows, f"{n_rows} equations but {len(b)} right-hand sides"
    n_cols = len(a[0]) if n_rows else 0
    m = [[Fraction(x) for x in row] for row in a]
    for row in m:
        assert len(row) == n_cols, "ragged coefficient matrix"
    rhs = [Fraction(x) for x in b]
    t = [[Fraction(int(i == j)) for j in range(n_rows)] for i in range(n_rows)]

    pivots = _row_reduce(m, rhs, t)
    rank = len(pivots)
    for r in range(rank, n_rows):
        if rhs[r] != 0:
            return LinearSolution(rank=rank, certificate=t[r], pivot_columns=pivots)

    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = rhs[r]
    return LinearSolution(rank=rank, solution=x, pivot_columns=pivots)
