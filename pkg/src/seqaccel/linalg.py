"""A small dense linear solver used by the Pade and model-sequence oracles.

Gaussian elimination with partial pivoting, written against generic
scalars so that complex (or exact) coefficient types survive the solve.
A pivot below ``pivot_rtol`` times the magnitude scale of the original
matrix raises ``SingularMatrixError`` rather than returning an
ill-conditioned solution.
"""

from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrixError


def solve_dense(matrix: Sequence[Sequence], rhs: Sequence, pivot_rtol: float = 1e-13) -> list:
    n = len(matrix)
    if n == 0:
        return []
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a) or len(rhs) != n:
        raise ValueError("solve_dense needs a square system")
    b = list(rhs)
    scale = max((abs(x) for row in a for x in row), default=0.0)
    threshold = pivot_rtol * max(1.0, scale)

    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[pivot_row][col]) < threshold:
            raise SingularMatrixError(f"pivot {abs(a[pivot_row][col]):.3e} below threshold")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        inv = 1.0 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, n):
                a[r][c] = a[r][c] - factor * a[col][c]
            b[r] = b[r] - factor * b[col]

    x = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc = acc - a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x
