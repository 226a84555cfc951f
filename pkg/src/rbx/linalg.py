"""Exact Gaussian elimination over the rationals: rank and determinant."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import RatLike, as_rat


def _copy(rows: Sequence[Sequence[RatLike]]) -> list[list[Fraction]]:
    out = [[as_rat(c) for c in row] for row in rows]
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def rank(rows: Sequence[Sequence[RatLike]]) -> int:
    """Exact rank by fraction-free-of-error Gaussian elimination."""
    mat = _copy(rows)
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        for i in range(r + 1, nrows):
            if mat[i][col] == 0:
                continue
            factor = mat[i][col] * inv
            for j in range(col, ncols):
                mat[i][j] -= factor * mat[r][j]
        r += 1
        if r == nrows:
            break
    return r


def det(rows: Sequence[Sequence[RatLike]]) -> Fraction:
    """Exact determinant of a square matrix."""
    mat = _copy(rows)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        result *= mat[col][col]
        inv = 1 / mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col] == 0:
                continue
            factor = mat[i][col] * inv
            for j in range(col, n):
                mat[i][j] -= factor * mat[col][j]
    return result * sign
