"""Exact Gaussian elimination over Z_p or the rationals.

Matrices are lists of row lists. ``p=None`` selects rational arithmetic
(entries coerced to :class:`fractions.Fraction`); an integer ``p`` selects
the prime field Z_p.
"""

from __future__ import annotations

from fractions import Fraction

MERSENNE_61 = 2**61 - 1


def _coerce(matrix, p):
    if p is None:
        return [[Fraction(x) for x in row] for row in matrix]
    return [[int(x) % p for x in row] for row in matrix]


def _inv(x, p):
    return 1 / x if p is None else pow(x, -1, p)


def echelon(matrix, p=None, row_order=None, reduced=False):
    """Row-reduce ``matrix`` column by column.

    The pivot for each column is the first not-yet-used row, in
    ``row_order`` (default: natural order), holding a nonzero entry.

    Returns ``(rows, pivots)``: the transformed rows (indexed like the
    input) and a list of ``(column, source_row)`` pairs in pivot order.
    With ``reduced=True`` pivot rows are scaled to 1 and cleared above too.
    """
    rows = _coerce(matrix, p)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    free = list(range(len(rows))) if row_order is None else list(row_order)
    used: list[int] = []
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        piv = next((r for r in free if rows[r][col] != 0), None)
        if piv is None:
            continue
        free.remove(piv)
        prow = rows[piv]
        inv = _inv(prow[col], p)
        if reduced:
            prow = rows[piv] = [x * inv if p is None else x * inv % p for x in prow]
            inv = 1
        targets = free + used if reduced else free
        for r in targets:
            row = rows[r]
            f = row[col]
            if f == 0:
                continue
            f = f * inv if p is None else f * inv % p
            if p is None:
                rows[r] = [a - f * b for a, b in zip(row, prow)]
            else:
                rows[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        used.append(piv)
        pivots.append((col, piv))
    return rows, pivots


def rank(matrix, p=None) -> int:
    return len(echelon(matrix, p)[1])


def determinant(matrix, p=None):
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    rows = _coerce(matrix, p)
    det = Fraction(1) if p is None else 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0) if p is None else 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv if p is None else det * pv % p
        inv = _inv(pv, p)
        for r in range(col + 1, n):
            f = rows[r][col]
            if f == 0:
                continue
            f = f * inv if p is None else f * inv % p
            if p is None:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
            else:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[col])]
    return det if p is None else det % p


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def null_vector(matrix, ncols, p=None):
    """A nonzero ``x`` with ``matrix @ x = 0``, or ``None`` if the kernel is trivial.

    The first free column is set to 1 and the rest solved from the RREF.
    """
    if not matrix:
        return [Fraction(1) if p is None else 1] + [0] * (ncols - 1) if ncols else None
    rows, pivots = echelon(matrix, p, reduced=True)
    pivot_cols = {c for c, _ in pivots}
    free = next((c for c in range(ncols) if c not in pivot_cols), None)
    if free is None:
        return None
    one = Fraction(1) if p is None else 1
    x = [Fraction(0) if p is None else 0] * ncols
    x[free] = one
    for col, r in pivots:
        v = -rows[r][free]
        x[col] = v if p is None else v % p
    return x


def left_null_vector(matrix, p=None):
    """A nonzero ``w`` with ``w^T matrix = 0``, or ``None``."""
    m = len(matrix)
    if m == 0:
        return None
    if not matrix[0]:
        return [Fraction(1) if p is None else 1] + [0] * (m - 1)
    return null_vector(transpose(matrix), m, p)
