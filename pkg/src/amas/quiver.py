"""Ice quivers: mutation, canonical labeling, mutation classes.

An ice quiver is stored as its skew-symmetric integer matrix ``b`` of size
``m`` x ``m`` together with the count ``n`` of mutable vertices; vertices are
labeled 1..m externally (frozen ones are n+1..m) and indexed 0..m-1
internally.  ``b[i][j]`` is the number of arrows i->j minus the number of
arrows j->i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .roots import DynkinType

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IceQuiver:
    n: int
    m: int
    b: Matrix

    def __post_init__(self) -> None:
        if not 0 <= self.n <= self.m:
            raise ValueError(f"need 0 <= n <= m, got n={self.n}, m={self.m}")
        b = tuple(tuple(row) for row in self.b)
        object.__setattr__(self, "b", b)
        if len(b) != self.m or any(len(row) != self.m for row in b):
            raise ValueError(f"matrix must be {self.m}x{self.m}")
        for i in range(self.m):
            for j in range(i, self.m):
                if b[i][j] != -b[j][i]:
                    raise ValueError(
                        f"matrix is not skew-symmetric at entry ({i + 1},{j + 1})"
                    )
                if i >= self.n and j >= self.n and b[i][j] != 0:
                    raise ValueError(
                        f"arrow between frozen vertices at entry ({i + 1},{j + 1})"
                    )

    # -- constructors --------------------------------------------------

    @classmethod
    def from_arrows(
        cls, m: int, arrows: Iterable[tuple[int, int]], n: int | None = None
    ) -> IceQuiver:
        """Build from 1-based (source, target) pairs, repeated for multiplicity."""
        if n is None:
            n = m
        b = [[0] * m for _ in range(m)]
        for s, t in arrows:
            if not (1 <= s <= m and 1 <= t <= m):
                raise ValueError(f"arrow ({s},{t}) out of range")
            b[s - 1][t - 1] += 1
            b[t - 1][s - 1] -= 1
        return cls(n, m, tuple(tuple(row) for row in b))

    @classmethod
    def empty(cls, m: int) -> IceQuiver:
        return cls.from_arrows(m, ())

    # -- queries --------------------------------------------------------

    def is_good(self) -> bool:
        return self.m == self.n

    def arrows(self) -> list[tuple[int, int, int]]:
        """List of (source, target, multiplicity), 1-based, positive entries."""
        result = []
        for i in range(self.m):
            for j in range(self.m):
                if self.b[i][j] > 0:
                    result.append((i + 1, j + 1, self.b[i][j]))
        return result

    def underlying_edges(self) -> set[tuple[int, int]]:
        """Undirected edges (0-based sorted pairs), ignoring multiplicity."""
        return {
            (i, j)
            for i in range(self.m)
            for j in range(i + 1, self.m)
            if self.b[i][j] != 0
        }

    def is_connected(self) -> bool:
        if self.m == 0:
            return True
        adj: dict[int, list[int]] = {i: [] for i in range(self.m)}
        for i, j in self.underlying_edges():
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.m

    # -- mutation ---------------------------------------------------------

    def mutate(self, k: int) -> IceQuiver:
        """Mutation at the 1-based mutable vertex ``k``; the input is unchanged."""
        if not 1 <= k <= self.m:
            raise ValueError(f"vertex {k} out of range 1..{self.m}")
        if k > self.n:
            raise ValueError(f"vertex {k} is frozen and cannot be mutated")
        kk = k - 1
        b = self.b
        m, n = self.m, self.n
        new = [[0] * m for _ in range(m)]
        for i in range(m):
            bik = b[i][kk]
            row = b[i]
            out = new[i]
            for j in range(m):
                if i == kk or j == kk:
                    out[j] = -row[j]
                elif i >= n and j >= n:
                    out[j] = 0
                else:
                    prod = bik * b[kk][j]
                    if prod > 0:
                        out[j] = row[j] + (prod if bik > 0 else -prod)
                    else:
                        out[j] = row[j]
        return IceQuiver(n, m, tuple(tuple(r) for r in new))

    def mutate_sequence(self, ks: Iterable[int]) -> IceQuiver:
        q = self
        for k in ks:
            q = q.mutate(k)
        return q

    def principal_extension(self) -> IceQuiver:
        """Add one frozen vertex n+i and one arrow (n+i) -> i per mutable i."""
        if self.m != self.n:
            raise ValueError("input already has frozen vertices")
        n = self.n
        m = 2 * n
        b = [[0] * m for _ in range(m)]
        for i in range(n):
            for j in range(n):
                b[i][j] = self.b[i][j]
        for i in range(n):
            b[n + i][i] = 1
            b[i][n + i] = -1
        return IceQuiver(n, m, tuple(tuple(row) for row in b))

    # -- canonical labeling ------------------------------------------------

    def canonical(self) -> tuple[IceQuiver, tuple[int, ...]]:
        """Canonical representative under frozen-set-preserving relabelings.

        Returns the canonical quiver and a relabeling tuple ``perm`` with
        ``perm[i]`` the new 0-based index of old 0-based vertex ``i``.  Two
        ice quivers are isomorphic by a relabeling that maps mutable vertices
        to mutable and frozen to frozen iff their canonical forms are equal.
        """
        matrix, perms = _canonical_search(self, _initial_colors_block(self))
        return IceQuiver(self.n, self.m, matrix), perms[0]

    def canonical_all_perms(
        self, fix_frozen_pointwise: bool = False
    ) -> tuple[Matrix, list[tuple[int, ...]]]:
        """Canonical matrix and every relabeling that achieves it."""
        colors = (
            _initial_colors_pointwise(self)
            if fix_frozen_pointwise
            else _initial_colors_block(self)
        )
        return _canonical_search(self, colors)


def _initial_colors_block(q: IceQuiver) -> list[int]:
    # Frozen vertices may permute among themselves.
    return [0] * q.n + [1] * (q.m - q.n)


def _initial_colors_pointwise(q: IceQuiver) -> list[int]:
    # Frozen vertices are fixed pointwise (seed isomorphism).
    return [0] * q.n + list(range(1, q.m - q.n + 1))


def _refine(b: Matrix, m: int, colors: list[int]) -> list[int]:
    """Iterated invariant refinement; color ids are label-invariant ranks."""
    while True:
        sigs = []
        for i in range(m):
            row = b[i]
            neighbor = sorted(
                (colors[j], row[j]) for j in range(m) if j != i and row[j]
            )
            sigs.append((colors[i], tuple(neighbor)))
        order = sorted(set(sigs))
        rank = {sig: r for r, sig in enumerate(order)}
        new_colors = [rank[sig] for sig in sigs]
        if new_colors == colors:
            return colors
        if len(order) == len(set(colors)):
            # Partition stabilized (colors renamed only).
            return new_colors
        colors = new_colors


def _canonical_search(
    q: IceQuiver, colors: list[int]
) -> tuple[Matrix, list[tuple[int, ...]]]:
    m, b = q.m, q.b
    if m == 0:
        return ((), [()])
    best: Matrix | None = None
    best_perms: list[tuple[int, ...]] = []

    def leaf(colors: list[int]) -> None:
        nonlocal best, best_perms
        order = sorted(range(m), key=lambda i: colors[i])
        perm = [0] * m
        for new, old in enumerate(order):
            perm[old] = new
        matrix = tuple(tuple(b[i][j] for j in order) for i in order)
        if best is None or matrix < best:
            best = matrix
            best_perms = [tuple(perm)]
        elif matrix == best:
            best_perms.append(tuple(perm))

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            leaf(colors)
            return
        for v in target:
            branched = [c * 2 for c in colors]
            branched[v] -= 1
            search(_refine(b, m, branched))

    search(_refine(b, m, colors))
    assert best is not None
    return best, sorted(best_perms)


# -- Dynkin recognition -----------------------------------------------------


def is_dynkin(q: IceQuiver) -> DynkinType | None:
    """The Dynkin type when the underlying graph is a simply-laced diagram."""
    if q.m != q.n:
        raise ValueError("is_dynkin expects a good quiver (no frozen vertices)")
    m = q.m
    if m == 0:
        return None
    if any(abs(e) > 1 for row in q.b for e in row):
        return None
    edges = q.underlying_edges()
    if len(edges) != m - 1 or not q.is_connected():
        return None
    degree = [0] * m
    adj: dict[int, list[int]] = {i: [] for i in range(m)}
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
        adj[i].append(j)
        adj[j].append(i)
    if any(d > 3 for d in degree):
        return None
    branch_nodes = [i for i in range(m) if degree[i] == 3]
    if not branch_nodes:
        return DynkinType("A", m)
    if len(branch_nodes) > 1:
        return None
    center = branch_nodes[0]
    lengths = sorted(_branch_length(adj, center, nxt) for nxt in adj[center])
    if lengths[0] != 1:
        return None
    if lengths[1] == 1:
        return DynkinType("D", lengths[2] + 3)
    if lengths[1] == 2 and lengths[2] in (2, 3, 4):
        return DynkinType("E", lengths[2] + 4)
    return None


def _branch_length(adj: dict[int, list[int]], start: int, first: int) -> int:
    length = 1
    prev, cur = start, first
    while len(adj[cur]) == 2:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        length += 1
    return length


# -- mutation classes ---------------------------------------------------------


def mutation_class(
    q: IceQuiver, budget: int = 100_000
) -> tuple[frozenset[IceQuiver], bool]:
    """Breadth-first closure of the canonical form under mutation.

    Stops with an ``incomplete`` flag as soon as the class would exceed
    ``budget`` members; otherwise the returned set is the full mutation class
    up to frozen-set-preserving isomorphism.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    start, _ = q.canonical()
    seen: dict[Matrix, IceQuiver] = {start.b: start}
    frontier = [start]
    while frontier:
        next_matrices: list[IceQuiver] = []
        for cq in frontier:
            for k in range(1, cq.n + 1):
                canon, _ = cq.mutate(k).canonical()
                if canon.b not in seen:
                    if len(seen) >= budget:
                        return frozenset(seen.values()), False
                    seen[canon.b] = canon
                    next_matrices.append(canon)
        frontier = sorted(next_matrices, key=lambda quiv: quiv.b)
    return frozenset(seen.values()), True


@dataclass(frozen=True)
class FiniteTypeResult:
    status: str  # "finite" | "infinite" | "unknown"
    dynkin: DynkinType | None = None
    explored: int = 0

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"


def detect_finite_type(q: IceQuiver, budget: int = 100_000) -> FiniteTypeResult:
    """Search the mutation class for a Dynkin member.

    A Dynkin member certifies finitely many cluster variables; exhausting the
    class without one certifies infinitely many; hitting the budget is
    inconclusive.
    """
    if q.m != q.n:
        raise ValueError("detect_finite_type expects a good quiver")
    if not q.is_connected():
        raise ValueError("detect_finite_type expects a connected quiver")
    start, _ = q.canonical()
    found = is_dynkin(start)
    if found is not None:
        return FiniteTypeResult("finite", found, 1)
    seen: set[Matrix] = {start.b}
    frontier = [start]
    while frontier:
        next_quivers: list[IceQuiver] = []
        for cq in frontier:
            for k in range(1, cq.n + 1):
                canon, _ = cq.mutate(k).canonical()
                if canon.b in seen:
                    continue
                dynkin = is_dynkin(canon)
                if dynkin is not None:
                    return FiniteTypeResult("finite", dynkin, len(seen) + 1)
                if len(seen) >= budget:
                    return FiniteTypeResult("unknown", None, len(seen))
                seen.add(canon.b)
                next_quivers.append(canon)
        frontier = sorted(next_quivers, key=lambda quiv: quiv.b)
    return FiniteTypeResult("infinite", None, len(seen))
