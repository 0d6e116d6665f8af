"""
Exact linear algebra over the rationals.

Gaussian elimination on ``Fraction`` entries; matrices here are at most a few
dozen rows, so dense row operations are all that is needed.
"""

from fractions import Fraction
from typing import List, Sequence

Matrix = List[List[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Copy a matrix into a fresh list of Fraction rows."""
    return [[Fraction(x) for x in row] for row in rows]


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """
    Determinant by elimination with row swaps.

    Args:
        rows: Square matrix

    Returns:
        The exact determinant (1 for the empty matrix)
    """
    m = to_fraction_matrix(rows)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def leading_principal_minors(rows: Sequence[Sequence]) -> List[Fraction]:
    """Return the leading principal minors of orders 1..n."""
    n = len(rows)
    return [determinant([row[:k] for row in rows[:k]]) for k in range(1, n + 1)]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> List[Fraction]:
    """
    Solve ``A x = b`` for square, nonsingular ``A`` by Gauss-Jordan elimination.

    Args:
        rows: Square coefficient matrix
        rhs: Right-hand side

    Returns:
        The unique solution

    Raises:
        ValueError: If the matrix is singular or shapes disagree
    """
    n = len(rows)
    if len(rhs) != n or any(len(row) != n for row in rows):
        raise ValueError("solve expects a square system")
    a = to_fraction_matrix(rows)
    b = [Fraction(x) for x in rhs]

    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("Matrix is not full rank")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        p = a[col][col]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col] / p
            if f == 0:
                continue
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
            b[r] -= f * b[col]

    return [b[i] / a[i][i] for i in range(n)]
