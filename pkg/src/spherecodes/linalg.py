"""Gaussian elimination over Q(sqrt r) for the small systems the constructions need."""

from __future__ import annotations

from .scalars import QuadScalar

__all__ = ["row_reduce", "rank", "solve"]


def row_reduce(rows: list[list[QuadScalar]]) -> tuple[list[list[QuadScalar]], list[int]]:
    """Reduced row echelon form and pivot columns (exact)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col].inverse()
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank(rows: list[list[QuadScalar]]) -> int:
    return len(row_reduce(rows)[1])


def solve(matrix: list[list[QuadScalar]], rhs: list[QuadScalar]) -> list[QuadScalar]:
    """Solve a square non-singular system exactly."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    red, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]
