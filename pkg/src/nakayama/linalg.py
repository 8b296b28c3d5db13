"""Exact linear algebra over the rationals.

Dense matrices are numpy arrays of dtype ``object`` holding ``Fraction``
entries, so shapes with a zero dimension behave.  Sparse systems (the
intertwiner equations) use dict rows.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def zeros(rows: int, cols: int) -> np.ndarray:
    a = np.empty((rows, cols), dtype=object)
    a.fill(Fraction(0))
    return a


def identity(n: int) -> np.ndarray:
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return a


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = m.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if a[i, col] != 0]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, col]
        for i in range(rows):
            if i != r and a[i, col] != 0:
                a[i] = a[i] - a[i, col] * a[r]
        pivots.append(col)
        r += 1
    return a, pivots


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def nullspace(m: np.ndarray) -> np.ndarray:
    """Columns form a basis of ``{x : m @ x = 0}``."""
    cols = m.shape[1]
    if m.shape[0] == 0:
        return identity(cols)
    a, pivots = rref(m)
    free = [j for j in range(cols) if j not in pivots]
    basis = zeros(cols, len(free))
    for t, f in enumerate(free):
        basis[f, t] = Fraction(1)
        for r, p in enumerate(pivots):
            basis[p, t] = -a[r, f]
    return basis


def solve(b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """X with ``b @ X == c``; ValueError if some column of c is not in the column span of b."""
    bc = b.shape[1]
    if c.shape[1] == 0 or bc == 0:
        if c.size and any(x != 0 for x in c.flat):
            raise ValueError("inconsistent system")
        return zeros(bc, c.shape[1])
    a, pivots = rref(np.hstack([b, c]))
    x = zeros(bc, c.shape[1])
    for r, p in enumerate(pivots):
        if p >= bc:
            raise ValueError("inconsistent system")
        x[p] = a[r, bc:]
    return x


def sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {j: Fraction(v) for j, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {j: v * inv for j, v in row.items()}
                break
            f = row[col]
            for j, v in piv.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return len(pivots)
