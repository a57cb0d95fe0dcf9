"""Exact integer matrix helpers: products and fraction-free rank."""

from __future__ import annotations


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Integer matrix product; a is r x m, b is m x c."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"inner dimensions differ: {len(a[0])} vs {len(b)}")
    cols = len(b[0]) if b else 0
    return [
        [sum(row[i] * b[i][j] for i in range(len(b))) for j in range(cols)]
        for row in a
    ]


def is_zero_matrix(rows: list[list[int]]) -> bool:
    return all(not any(row) for row in rows)


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals, computed entirely in integers.

    Fraction-free elimination: each update divides by the previous pivot,
    which the Sylvester determinant identity makes exact; a nonzero remainder
    means corrupted input and raises.  No floating point anywhere.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            head = m[r][col]
            for c in range(col + 1, ncols):
                num = m[r][c] * pivot - head * m[rank][c]
                quot, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                m[r][c] = quot
            m[r][col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank
