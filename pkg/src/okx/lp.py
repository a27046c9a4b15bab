"""Exact two-phase simplex (Bland's rule) for ``max c.x  s.t.  A x = b, x >= 0``.

Constraint matrices and costs are rational; right-hand sides may be
:class:`~okx.numbers.Eps`, which is what lets the limiting-body code run the
same LPs with an infinitesimal perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LPError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: object = None

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _pivot(T, rhs, row, col):
    p = T[row][col]
    T[row] = [v / p for v in T[row]]
    rhs[row] = rhs[row] / p
    for i in range(len(T)):
        if i != row:
            f = T[i][col]
            if f != 0:
                Ti, Tr = T[i], T[row]
                T[i] = [a - f * b if b != 0 else a for a, b in zip(Ti, Tr)]
                if rhs[row] != 0:
                    rhs[i] = rhs[i] - f * rhs[row]


def _run(T, rhs, basis, cost, allowed) -> str:
    m = len(T)
    max_iter = 10_000
    for _ in range(max_iter):
        enter = None
        for j in allowed:
            if j in basis:
                continue
            r = cost[j]
            for i in range(m):
                cb = cost[basis[i]]
                if cb != 0 and T[i][j] != 0:
                    r -= cb * T[i][j]
            if r > 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED
        _pivot(T, rhs, leave, enter)
        basis[leave] = enter
    raise LPError("simplex iteration limit exceeded")


def maximize(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Solve ``max c.x`` over ``A_eq x = b_eq, x >= 0`` exactly."""
    n = len(c)
    m = len(A_eq)
    T = [[Fraction(v) for v in row] for row in A_eq]
    rhs = list(b_eq)
    if any(len(row) != n for row in T) or len(rhs) != m:
        raise LPError("inconsistent LP dimensions")
    for i in range(m):
        if rhs[i] < 0:
            T[i] = [-v for v in T[i]]
            rhs[i] = -rhs[i]
    for i in range(m):
        T[i] = T[i] + [Fraction(int(i == k)) for k in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _run(T, rhs, basis, cost1, range(n + m))
    infeas = sum((rhs[i] for i in range(m) if basis[i] >= n), Fraction(0))
    if infeas > 0:
        return LPResult(INFEASIBLE)
    # drive artificials out of the basis; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i], rhs[i], basis[i]
                continue
            _pivot(T, rhs, i, col)
            basis[i] = col
        i += 1
    T = [row[:n] for row in T]
    cost = [Fraction(v) for v in c]
    status = _run(T, rhs, basis, cost, range(n))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        x[b] = rhs[i]
    value = Fraction(0)
    for cj, xj in zip(cost, x):
        if cj != 0 and xj != 0:
            value = value + cj * xj
    return LPResult(OPTIMAL, tuple(x), value)


def feasible_point(A_eq: Sequence[Sequence], b_eq: Sequence) -> tuple | None:
    res = maximize([Fraction(0)] * (len(A_eq[0]) if A_eq else 0), A_eq, b_eq)
    return res.x if res.ok else None
