"""Geometric seed models.

Polygon model: triangulations of a convex (n+3)-gon with vertices 0..n+2
placed counterclockwise.  Each triangle (a, b, c) in cyclic order contributes
the arrow cycle

        edge(a,b) -> edge(a,c) -> edge(b,c) -> edge(a,b)

between its sides/diagonals (arrows between two sides are dropped); this is
the clockwise rotational sense within the triangle and is pinned by an exact
arrow-set test against the hexagon fan.

Unipotent model: the initial seed of upper-unitriangular (n+1) x (n+1)
matrices whose variables are the minors with lower-left corner (i, j) of
maximal size, arranged on a grid with the antidiagonal i+j = n+2 frozen.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .laurent import LaurentPoly
from .quiver import IceQuiver
from .seeds import Seed, mutate_seed, exchange_graph

Edge = tuple[int, int]


# -- triangulations -----------------------------------------------------------


def polygon_sides(size: int) -> list[Edge]:
    return sorted(
        tuple(sorted((v, (v + 1) % size))) for v in range(size)
    )


def _crosses(d1: Edge, d2: Edge) -> bool:
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    inside_c = a < c < b
    inside_d = a < d < b
    return inside_c != inside_d


@dataclass(frozen=True)
class Triangulation:
    size: int  # polygon vertex count, labels 0..size-1
    diagonals: tuple[Edge, ...]

    def __post_init__(self) -> None:
        diags = tuple(sorted(tuple(sorted(d)) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        if self.size < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if len(set(diags)) != len(diags):
            raise ValueError("repeated diagonal")
        for a, b in diags:
            if not (0 <= a < b < self.size):
                raise ValueError(f"diagonal {(a, b)} out of range")
            if b - a == 1 or (a == 0 and b == self.size - 1):
                raise ValueError(f"{(a, b)} is a side, not a diagonal")
        if len(diags) != self.size - 3:
            raise ValueError(
                f"a triangulation of a {self.size}-gon needs {self.size - 3} diagonals"
            )
        for d1, d2 in combinations(diags, 2):
            if _crosses(d1, d2):
                raise ValueError(f"diagonals {d1} and {d2} cross")

    @classmethod
    def fan(cls, size: int, apex: int = 0) -> Triangulation:
        diags = [
            tuple(sorted((apex, (apex + k) % size))) for k in range(2, size - 1)
        ]
        return cls(size, tuple(diags))

    def edges(self) -> set[Edge]:
        return set(polygon_sides(self.size)) | set(self.diagonals)

    def triangles(self) -> list[tuple[int, int, int]]:
        """Faces, as vertex triples in ascending (= counterclockwise) order."""
        edges = self.edges()
        return [
            (a, b, c)
            for a, b, c in combinations(range(self.size), 3)
            if (a, b) in edges and (b, c) in edges and (a, c) in edges
        ]

    def flip(self, d: Edge) -> Triangulation:
        """Replace a diagonal by the opposite one of its quadrilateral."""
        d = tuple(sorted(d))
        if d not in self.diagonals:
            raise ValueError(f"{d} is not a diagonal of this triangulation")
        adjacent = [t for t in self.triangles() if d[0] in t and d[1] in t]
        assert len(adjacent) == 2
        opposite = tuple(
            sorted(
                next(v for v in t if v not in d) for t in adjacent
            )
        )
        diags = tuple(x for x in self.diagonals if x != d) + (opposite,)
        return Triangulation(self.size, diags)


def triangulation_quiver(
    t: Triangulation, diagonal_order: tuple[Edge, ...] | None = None
) -> tuple[IceQuiver, tuple[Edge, ...]]:
    """Ice quiver of a triangulation plus the vertex -> edge dictionary.

    Mutable vertices are the diagonals (in ``diagonal_order``, default
    sorted), frozen vertices the polygon sides in sorted order.
    """
    diagonals = diagonal_order or t.diagonals
    if sorted(diagonals) != list(t.diagonals):
        raise ValueError("diagonal_order must enumerate the diagonals")
    sides = polygon_sides(t.size)
    vertex_edges = tuple(diagonals) + tuple(sides)
    index = {edge: i for i, edge in enumerate(vertex_edges)}
    n = len(diagonals)
    m = len(vertex_edges)
    b = [[0] * m for _ in range(m)]

    def add_arrow(src: Edge, dst: Edge) -> None:
        i, j = index[src], index[dst]
        if i >= n and j >= n:
            return
        b[i][j] += 1
        b[j][i] -= 1

    for a, bb, c in t.triangles():
        e_ab = tuple(sorted((a, bb)))
        e_ac = tuple(sorted((a, c)))
        e_bc = tuple(sorted((bb, c)))
        add_arrow(e_ab, e_ac)
        add_arrow(e_ac, e_bc)
        add_arrow(e_bc, e_ab)
    quiver = IceQuiver(n, m, tuple(tuple(row) for row in b))
    return quiver, vertex_edges


# -- Pluecker verification ----------------------------------------------------


def minor(matrix: tuple[tuple[int, ...], tuple[int, ...]], i: int, j: int) -> int:
    """2x2 minor on columns i, j of a 2-row integer matrix."""
    return matrix[0][i] * matrix[1][j] - matrix[0][j] * matrix[1][i]


def random_generic_matrix(
    n: int, rng: random.Random, low: int = -9, high: int = 9
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """2 x (n+3) integer matrix with every 2x2 minor nonzero."""
    cols = n + 3
    while True:
        matrix = (
            tuple(rng.randint(low, high) for _ in range(cols)),
            tuple(rng.randint(low, high) for _ in range(cols)),
        )
        if all(
            minor(matrix, i, j) != 0 for i in range(cols) for j in range(i + 1, cols)
        ):
            return matrix


@dataclass(frozen=True)
class PlueckerReport:
    ok: bool
    n: int
    seeds: int  # distinct triangulations reached
    dynkin_seeds: int  # seed count of the rank-n path quiver
    variables_reached: int
    expected_variables: int  # diagonal count n(n+3)/2
    mismatches: tuple[str, ...]
    complete: bool


def plucker_check(
    n: int,
    sample: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
    budget: int = 10_000,
    rng: random.Random | int | None = None,
) -> PlueckerReport:
    """Walk the flip graph from the fan, mutating minor values exactly.

    Every exchange value must equal the minor of the predicted new diagonal,
    and the number of seeds must match the rank-n path-quiver exchange graph.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rand = rng if isinstance(rng, random.Random) else random.Random(rng)
    if sample is None:
        sample = random_generic_matrix(n, rand)
    size = n + 3
    values: dict[Edge, Fraction] = {}
    for i in range(size):
        for j in range(i + 1, size):
            values[(i, j)] = Fraction(minor(sample, i, j))
    mismatches: list[str] = []
    start = Triangulation.fan(size)
    seen = {start.diagonals}
    frontier = [start]
    complete = True
    reached: set[Edge] = set(start.diagonals)
    while frontier:
        fresh: list[Triangulation] = []
        for t in frontier:
            quiver, vertex_edges = triangulation_quiver(t)
            for k, d in enumerate(t.diagonals, start=1):
                flipped = t.flip(d)
                new_d = next(x for x in flipped.diagonals if x not in t.diagonals)
                p_out = Fraction(1)
                p_in = Fraction(1)
                for j in range(quiver.m):
                    e = quiver.b[k - 1][j]
                    if e > 0:
                        p_out *= values[vertex_edges[j]] ** e
                    elif e < 0:
                        p_in *= values[vertex_edges[j]] ** (-e)
                exchanged = (p_out + p_in) / values[d]
                if exchanged != values[new_d]:
                    mismatches.append(
                        f"flip of {d} in {t.diagonals}: got {exchanged}, "
                        f"expected minor {values[new_d]} of {new_d}"
                    )
                reached.add(new_d)
                if flipped.diagonals not in seen:
                    if len(seen) >= budget:
                        complete = False
                        break
                    seen.add(flipped.diagonals)
                    fresh.append(flipped)
            if not complete:
                break
        if not complete:
            break
        frontier = fresh
    path = IceQuiver.from_arrows(n, [(i, i + 1) for i in range(1, n)])
    dynkin_seeds = len(exchange_graph(path, budget=budget).seeds)
    expected = n * (n + 3) // 2
    ok = (
        complete
        and not mismatches
        and len(reached) == expected
        and len(seen) == dynkin_seeds
    )
    return PlueckerReport(
        ok=ok,
        n=n,
        seeds=len(seen),
        dynkin_seeds=dynkin_seeds,
        variables_reached=len(reached),
        expected_variables=expected,
        mismatches=tuple(mismatches),
        complete=complete,
    )


# -- unipotent minors seed -----------------------------------------------------


def upper_entry_names(n: int) -> tuple[tuple[int, int], ...]:
    """Strictly-upper index pairs (k, l), k < l, of an (n+1) x (n+1) matrix."""
    return tuple(
        (k, l) for k in range(1, n + 2) for l in range(k + 1, n + 2)
    )


def _symbolic_unitriangular(n: int) -> list[list[LaurentPoly]]:
    entries = upper_entry_names(n)
    nvars = len(entries)
    index = {pair: idx for idx, pair in enumerate(entries)}
    size = n + 1
    mat = [[LaurentPoly.zero(nvars) for _ in range(size)] for _ in range(size)]
    for r in range(size):
        for c in range(size):
            if r == c:
                mat[r][c] = LaurentPoly.one(nvars)
            elif r < c:
                mat[r][c] = LaurentPoly.variable(index[(r + 1, c + 1)], nvars)
    return mat


def _det(mat: list[list[LaurentPoly]]) -> LaurentPoly:
    size = len(mat)
    if size == 0:
        raise ValueError("empty determinant")
    if size == 1:
        return mat[0][0]
    nvars = mat[0][0].nvars
    total = LaurentPoly.zero(nvars)
    for c in range(size):
        if mat[0][c].is_zero:
            continue
        sub = [[row[cc] for cc in range(size) if cc != c] for row in mat[1:]]
        term = mat[0][c] * _det(sub)
        total = total + (term if c % 2 == 0 else -term)
    return total


def minor_function(n: int, i: int, j: int) -> LaurentPoly:
    """f_{ij}: determinant of the largest square submatrix with the (i, j)
    entry in its lower-left corner (rows i-k+1..i, columns j..j+k-1,
    k = min(i, n+2-j))."""
    if not (1 <= i <= n and 2 <= j and i + j <= n + 2):
        raise ValueError(f"index ({i},{j}) out of range")
    mat = _symbolic_unitriangular(n)
    k = min(i, n + 2 - j)
    rows = range(i - k, i)
    cols = range(j - 1, j - 1 + k)
    sub = [[mat[r][c] for c in cols] for r in rows]
    return _det(sub)


@dataclass(frozen=True)
class MinorSeed:
    seed: Seed
    positions: tuple[tuple[int, int], ...]  # vertex -> (i, j), mutable first
    entry_names: tuple[tuple[int, int], ...]  # variable index -> (k, l)


def unipotent_initial_seed(n: int) -> MinorSeed:
    """Minor-function seed on the grid 1 <= i <= n, 2 <= j, i + j <= n + 2.

    Arrows: rightward (i,j)->(i,j+1), upward (i+1,j)->(i,j), diagonal
    (i,j+1)->(i+1,j) wherever the endpoints exist; the frozen antidiagonal
    contributes no frozen-frozen arrows.
    """
    if not 1 <= n <= 4:
        raise ValueError("supported range is 1 <= n <= 4")
    cells = [(i, j) for i in range(1, n + 1) for j in range(2, n + 3 - i)]
    mutable = sorted(c for c in cells if sum(c) < n + 2)
    frozen = sorted(c for c in cells if sum(c) == n + 2)
    positions = tuple(mutable + frozen)
    index = {pos: idx for idx, pos in enumerate(positions)}
    m = len(positions)
    n_mut = len(mutable)
    b = [[0] * m for _ in range(m)]

    def add_arrow(src: tuple[int, int], dst: tuple[int, int]) -> None:
        if src not in index or dst not in index:
            return
        i, j = index[src], index[dst]
        if i >= n_mut and j >= n_mut:
            return
        b[i][j] += 1
        b[j][i] -= 1

    for i, j in positions:
        add_arrow((i, j), (i, j + 1))
        add_arrow((i + 1, j), (i, j))
        add_arrow((i, j + 1), (i + 1, j))
    quiver = IceQuiver(n_mut, m, tuple(tuple(row) for row in b))
    variables = tuple(minor_function(n, i, j) for i, j in positions)
    return MinorSeed(
        seed=Seed(quiver, variables),
        positions=positions,
        entry_names=upper_entry_names(n),
    )


def _entries_to_point(
    n: int, entries: dict[tuple[int, int], Fraction]
) -> tuple[Fraction, ...]:
    return tuple(entries[pair] for pair in upper_entry_names(n))


def total_positivity_test(
    n: int,
    entries: dict[tuple[int, int], Fraction],
    mutations: tuple[int, ...] = (),
) -> bool:
    """Cluster criterion: mutate the minor seed, evaluate every cluster
    variable and coefficient at the matrix, and require all values > 0."""
    model = unipotent_initial_seed(n)
    seed = model.seed
    for k in mutations:
        seed = mutate_seed(seed, k)
    point = _entries_to_point(n, entries)
    return all(v.eval(point) > 0 for v in seed.vars)


@lru_cache(maxsize=None)
def _minor_vanishes_identically(
    n: int, rows: tuple[int, ...], cols: tuple[int, ...]
) -> bool:
    symbolic = _symbolic_unitriangular(n)
    return _det([[symbolic[r][c] for c in cols] for r in rows]).is_zero


def total_positivity_oracle(n: int, entries: dict[tuple[int, int], Fraction]) -> bool:
    """All square minors not identically zero on the unitriangular group are
    positive; identical vanishing is detected symbolically."""
    size = n + 1
    numeric = [
        [
            Fraction(1) if r == c else (entries[(r + 1, c + 1)] if r < c else Fraction(0))
            for c in range(size)
        ]
        for r in range(size)
    ]
    for k in range(1, size + 1):
        for rows in combinations(range(size), k):
            for cols in combinations(range(size), k):
                if _minor_vanishes_identically(n, rows, cols):
                    continue
                value = _det_fraction([[numeric[r][c] for c in cols] for r in rows])
                if value <= 0:
                    return False
    return True


def _det_fraction(mat: list[list[Fraction]]) -> Fraction:
    size = len(mat)
    mat = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            if mat[r][col] != 0:
                factor = mat[r][col] * inv
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    return det


def jacobi_positive_matrix(
    n: int, rng: random.Random
) -> dict[tuple[int, int], Fraction]:
    """Totally positive unitriangular matrix: product of elementary upper
    bidiagonal factors with positive parameters along a longest reduced word."""
    size = n + 1
    word = [i for length in range(1, size) for i in range(length, 0, -1)]
    mat = [[Fraction(1 if r == c else 0) for c in range(size)] for r in range(size)]
    for i in word:
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        # Right-multiply by I + t E_{i,i+1} (1-based i).
        for r in range(size):
            mat[r][i] += t * mat[r][i - 1]
    return {
        (r + 1, c + 1): mat[r][c] for r in range(size) for c in range(r + 1, size)
    }
