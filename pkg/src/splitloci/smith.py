"""Smith normal form over the integers.

Matrices are lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def is_smith_form(S: Sequence[Sequence[int]]) -> bool:
    """Diagonal, nonnegative, each diagonal entry divides the next."""
    for i, row in enumerate(S):
        for j, x in enumerate(row):
            if i != j and x != 0:
                return False
    diag = [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a != 0 and b % a != 0:
            return False
    return True


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, S, V)`` with ``U @ A @ V == S`` in Smith form.

    ``U`` and ``V`` are unimodular.  ``S`` has the shape of ``A``, with
    nonnegative diagonal ``d_1 | d_2 | ...``.
    """
    S = [[int(x) for x in row] for row in A]
    m = len(S)
    n = len(S[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        for M in (S, U):
            M[dst] = [b + q * a for a, b in zip(M[src], M[dst])]

    def add_col(src, dst, q):
        for M in (S, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [
                (abs(S[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if S[i][j]
            ]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = S[t][t]

            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                # a smaller remainder exists; it becomes the next pivot
                continue

            # pivot row and column are clear; enforce divisibility
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)

        if S[t][t] < 0:
            U[t] = [-x for x in U[t]]
            S[t] = [-x for x in S[t]]
    return U, S, V


def diagonal(S: Sequence[Sequence[int]]) -> list[int]:
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]
