"""Exact linear algebra over the rationals (Fraction-based, no floats).

Small dense matrices only: row reduction, rank, kernel bases, and integer
normalisation of rational vectors.  Matrices are lists of lists of
Fractions, rows first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_fraction_matrix(matrix) -> list[list[Fraction]]:
    return [[Fraction(entry) for entry in row] for row in matrix]


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _to_fraction_matrix(matrix)
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pv = m[row][col]
        m[row] = [entry / pv for entry in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column.

    The vector for free column f has 1 at f and the solved pivot entries
    elsewhere; vectors are ordered by free column index.
    """
    m, pivots = rref(matrix)
    if not m:
        return []
    n_cols = len(m[0])
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -m[r][f]
        basis.append(vec)
    return basis


def integer_normalize(vector) -> list[int]:
    """Scale a rational vector to a primitive integer vector.

    Clears denominators, divides by the gcd, and flips signs so the first
    nonzero entry is positive.  The zero vector maps to itself.
    """
    vec = [Fraction(v) for v in vector]
    if all(v == 0 for v in vec):
        return [0] * len(vec)
    denom_lcm = 1
    for v in vec:
        d = v.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(v * denom_lcm) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def solve_from_rref(
    reduced: list[list[Fraction]],
    pivots: list[int],
    free_values: dict[int, Fraction],
    n_cols: int,
) -> list[Fraction]:
    """Kernel vector with the given free-column values (all free columns required)."""
    vec = [Fraction(0)] * n_cols
    for f, val in free_values.items():
        vec[f] = Fraction(val)
    for r, p in enumerate(pivots):
        vec[p] = -sum(reduced[r][f] * v for f, v in free_values.items())
    return vec
