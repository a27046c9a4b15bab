"""Small exact linear algebra over Fractions (right-hand sides may be Eps)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def dot(u: Sequence, v: Sequence):
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def mat_vec(M: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in M)


def inverse(M: Sequence[Sequence[Fraction]]) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def det(M: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            result = -result
        p = A[col][col]
        result *= p
        for r in range(col + 1, n):
            if A[r][col] != 0:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return result


def row_reduce(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows @ x = 0}."""
    R, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def inertia(Q: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric matrix by congruence.

    Diagonal pivots are used when available; otherwise an off-diagonal entry
    a_ij is promoted by adding row/column j to row/column i.
    """
    A = [[Fraction(x) for x in row] for row in Q]
    n = len(A)
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                         if i != j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for c in range(n):
                A[i][c] += A[j][c]
            for r in range(n):
                A[r][i] += A[r][j]
            piv = i
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            for row in A:
                row[k], row[piv] = row[piv], row[k]
        p = A[k][k]
        for j in range(k + 1, n):
            if A[j][k] != 0:
                f = A[j][k] / p
                for c in range(n):
                    A[j][c] -= f * A[k][c]
                for r in range(n):
                    A[r][j] -= f * A[r][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, neg, n - pos - neg


def is_negative_definite(G: Sequence[Sequence]) -> bool:
    n = len(G)
    return n == 0 or inertia(G) == (0, n, 0)
