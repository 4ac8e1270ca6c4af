"""Simply-laced root systems: positive roots, Coxeter numbers, incidence.

Vertex numbering: A_n is the path 1-2-...-n; D_n is the path 1..n-2 with
n-1 and n attached to n-2; E_n uses the Bourbaki numbering (node 2 attached
to node 4 on the path 1-3-4-5-...-n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Root = tuple[int, ...]

_LEGAL = {"A": range(1, 1_000_000), "D": range(4, 1_000_000), "E": (6, 7, 8)}
MAX_SUPPORTED_RANK = 8


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _LEGAL:
            raise ValueError(f"unknown family {self.family!r}; expected A, D or E")
        if self.rank not in _LEGAL[self.family]:
            raise ValueError(f"illegal rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _LEGAL or not text[1:].isdigit():
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def _diagram_edges(t: DynkinType) -> list[tuple[int, int]]:
    """0-based edges of the diagram under the documented numbering."""
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    # E: path 1-3-4-...-n plus the edge 2-4 (Bourbaki labels, 1-based).
    path = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return path + [(1, 3)]


def incidence_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Symmetric 0/1 adjacency matrix of the diagram."""
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i, j in _diagram_edges(t):
        a[i][j] = 1
        a[j][i] = 1
    return tuple(tuple(row) for row in a)


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = incidence_matrix(t)
    return tuple(
        tuple(2 if i == j else -a[i][j] for j in range(n)) for i in range(n)
    )


def _reflect(cartan: tuple[tuple[int, ...], ...], root: Root, i: int) -> Root:
    pairing = sum(cartan[i][j] * root[j] for j in range(len(root)))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(t: DynkinType) -> tuple[Root, ...]:
    """All positive roots in the simple-root basis, sorted.

    Generated from the simple roots by closure under simple reflections,
    keeping the roots with all-nonnegative coordinates.
    """
    if t.rank > MAX_SUPPORTED_RANK:
        raise ValueError(f"rank {t.rank} exceeds supported maximum {MAX_SUPPORTED_RANK}")
    n = t.rank
    cartan = cartan_matrix(t)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        fresh: list[Root] = []
        for root in frontier:
            for i in range(n):
                image = _reflect(cartan, root, i)
                if all(c >= 0 for c in image) and image not in roots:
                    roots.add(image)
                    fresh.append(image)
        frontier = fresh
    return tuple(sorted(roots))


def coxeter_number(t: DynkinType) -> int:
    """h = 2 |positive roots| / rank."""
    count = len(positive_roots(t))
    assert (2 * count) % t.rank == 0
    return 2 * count // t.rank


def highest_root(t: DynkinType) -> Root:
    """The unique positive root from which no simple reflection gains height."""
    cartan = cartan_matrix(t)
    candidates = [
        r
        for r in positive_roots(t)
        if all(
            sum(_reflect(cartan, r, i)) <= sum(r) for i in range(t.rank)
        )
    ]
    assert len(candidates) == 1
    return candidates[0]


@dataclass(frozen=True)
class RootSystem:
    type: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    coxeter: int
    incidence: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def root_system(t: DynkinType) -> RootSystem:
    return RootSystem(
        type=t,
        cartan=cartan_matrix(t),
        positive_roots=positive_roots(t),
        coxeter=coxeter_number(t),
        incidence=incidence_matrix(t),
    )
