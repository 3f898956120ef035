"""Smith normal form over Python integers, with unimodular transforms.

Matrices are lists of rows of ``int``.  No modular shortcuts: entries are
arbitrary precision throughout, so invariant factors are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == diag(diagonal)`` padded with zeros to the shape of A.

    ``diagonal`` holds the first ``rank`` nonzero entries, each positive and
    dividing the next.
    """

    U: Matrix
    V: Matrix
    diagonal: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def invariant_factors(self) -> tuple[int, ...]:
        """Nontrivial torsion invariant factors (those > 1)."""
        return tuple(s for s in self.diagonal if s != 1)

    def diagonal_matrix(self) -> Matrix:
        m, n = self.shape
        D = [[0] * n for _ in range(m)]
        for i, s in enumerate(self.diagonal):
            D[i][i] = s
        return D


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(v: Sequence[int], B: Sequence[Sequence[int]]) -> list[int]:
    cols = len(B[0]) if B else 0
    out = [0] * cols
    for x, row in zip(v, B):
        if x:
            for j, b in enumerate(row):
                if b:
                    out[j] += x * b
    return out


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M, dst, src, k):
    # row[dst] += k * row[src]
    rs, rd = M[src], M[dst]
    for c, x in enumerate(rs):
        if x:
            rd[c] += k * x


def _add_col(M, dst, src, k):
    for row in M:
        x = row[src]
        if x:
            row[dst] += k * x


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithForm:
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        _swap_rows(M, t, i)
        _swap_rows(U, t, i)
        _swap_cols(M, t, j)
        _swap_cols(V, t, j)

        while True:
            piv = M[t][t]
            moved = False
            for i in range(t + 1, m):
                x = M[i][t]
                if x:
                    q = x // piv
                    _add_row(M, i, t, -q)
                    _add_row(U, i, t, -q)
                    if M[i][t]:
                        # remainder is smaller than the pivot: promote it
                        _swap_rows(M, t, i)
                        _swap_rows(U, t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                x = M[t][j]
                if x:
                    q = x // piv
                    _add_col(M, j, t, -q)
                    _add_col(V, j, t, -q)
                    if M[t][j]:
                        _swap_cols(M, t, j)
                        _swap_cols(V, t, j)
                        moved = True
                        break
            if moved:
                continue
            # row and column clear; enforce divisibility of the trailing block
            bad = next(
                (i for i in range(t + 1, m) if any(M[i][j] % piv for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            _add_row(M, t, bad, 1)
            _add_row(U, t, bad, 1)

        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    diagonal = tuple(M[i][i] for i in range(t))
    return SmithForm(U=U, V=V, diagonal=diagonal, shape=(m, n))


def rank(A: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(A).rank


def is_smith_diagonal(diagonal: Sequence[int]) -> bool:
    return all(s > 0 for s in diagonal) and all(
        b % a == 0 for a, b in zip(diagonal, diagonal[1:])
    )


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = [list(row) for row in A]
    k = len(M)
    sign, prev = 1, 1
    for c in range(k - 1):
        if M[c][c] == 0:
            swap = next((r for r in range(c + 1, k) if M[r][c]), None)
            if swap is None:
                return 0
            M[c], M[swap] = M[swap], M[c]
            sign = -sign
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                M[r][j] = (M[r][j] * M[c][c] - M[r][c] * M[c][j]) // prev
        prev = M[c][c]
    return sign * M[-1][-1] if k else 1


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
