"""Small exact linear algebra: echelon forms over Q and over prime fields,
and enumeration of subspaces of F_p^d by reduced row-echelon representatives.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

Row = list[Fraction]


def rank_rational(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q by fraction-free-ish Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(a - factor * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def gaussian_binomial(d: int, e: int, p: int) -> int:
    """Number of e-dimensional subspaces of F_p^d."""
    if e < 0 or e > d:
        return 0
    num = den = 1
    for i in range(e):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspaces_mod(d: int, e: int, p: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All e-dimensional subspaces of F_p^d as reduced row-echelon bases.

    Pivot columns are chosen among all e-subsets; free entries (right of the
    own pivot, outside later pivot columns) range over F_p.
    """
    if e == 0:
        yield ()
        return
    for pivots in combinations(range(d), e):
        pivot_set = set(pivots)
        free_positions = [
            (r, c)
            for r in range(e)
            for c in range(pivots[r] + 1, d)
            if c not in pivot_set
        ]
        for values in product(range(p), repeat=len(free_positions)):
            rows = [[0] * d for _ in range(e)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free_positions, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def in_row_space_mod(
    basis: Sequence[Sequence[int]], vector: Sequence[int], p: int
) -> bool:
    """Membership of a vector in the row space of an RREF basis over F_p."""
    vec = [x % p for x in vector]
    for row in basis:
        pivot = next((c for c, x in enumerate(row) if x), None)
        if pivot is None:
            continue
        if vec[pivot]:
            factor = (vec[pivot] * pow(row[pivot], -1, p)) % p
            vec = [(a - factor * b) % p for a, b in zip(vec, row)]
    return not any(vec)


def mat_vec_mod(mat: Sequence[Sequence[int]], vec: Sequence[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat]


def lagrange_interpolate(
    points: Sequence[tuple[int, int]]
) -> list[Fraction]:
    """Coefficients (ascending degree) of the unique polynomial through points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # Basis polynomial prod_{j != i} (x - xj) / (xi - xj), expanded.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis  # multiply by x
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
