"""Seeds and Y-seeds, their mutation, and exchange-graph exploration.

A seed pairs an ice quiver with a tuple of m Laurent polynomials in the m
initial variables; frozen positions keep their generator forever.  Seed
isomorphism relabels mutable vertices (frozen ones stay fixed pointwise) and
permutes the variable tuple accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .quiver import IceQuiver
from .rational import RationalFunc

DEFAULT_BUDGET = 20_000


@dataclass(frozen=True)
class Seed:
    quiver: IceQuiver
    vars: tuple[LaurentPoly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(self.vars) != self.quiver.m:
            raise ValueError("need one variable per vertex")
        nv = {v.nvars for v in self.vars}
        if len(nv) > 1:
            raise ValueError("mixed variable counts in seed")

    def key(self) -> tuple:
        return (self.quiver.b, tuple(v.sort_key() for v in self.vars))


def initial_seed(q: IceQuiver) -> Seed:
    return Seed(q, tuple(LaurentPoly.variable(i, q.m) for i in range(q.m)))


def exchange_products(s: Seed, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The two products of the exchange relation at 1-based vertex ``k``:
    (product over arrows out of k, product over arrows into k)."""
    q = s.quiver
    kk = k - 1
    nvars = s.vars[0].nvars if s.vars else q.m
    p_out = LaurentPoly.one(nvars)
    p_in = LaurentPoly.one(nvars)
    for j in range(q.m):
        e = q.b[kk][j]
        if e > 0:
            p_out = p_out * s.vars[j] ** e
        elif e < 0:
            p_in = p_in * s.vars[j] ** (-e)
    return p_out, p_in


def mutate_seed(s: Seed, k: int) -> Seed:
    """Exchange-relation mutation; raises InexactDivision only on a bug,
    since the mutated variable is always a Laurent polynomial."""
    p_out, p_in = exchange_products(s, k)
    new_var = (p_out + p_in).divide_exact(s.vars[k - 1])
    new_vars = list(s.vars)
    new_vars[k - 1] = new_var
    return Seed(s.quiver.mutate(k), tuple(new_vars))


def mutate_seed_sequence(s: Seed, ks: Iterable[int]) -> Seed:
    for k in ks:
        s = mutate_seed(s, k)
    return s


def seed_canonical(s: Seed) -> Seed:
    """Canonical representative under mutable relabeling + variable permutation.

    Among the relabelings realizing the canonical quiver matrix, the one
    giving the lexicographically least variable tuple is chosen, so equality
    of canonical seeds is exactly seed isomorphism.
    """
    matrix, perms = s.quiver.canonical_all_perms(fix_frozen_pointwise=True)
    best_vars: tuple[LaurentPoly, ...] | None = None
    for perm in perms:
        arranged: list[LaurentPoly | None] = [None] * s.quiver.m
        for old, new in enumerate(perm):
            arranged[new] = s.vars[old]
        candidate = tuple(arranged)  # type: ignore[arg-type]
        if best_vars is None or _vars_key(candidate) < _vars_key(best_vars):
            best_vars = candidate
    assert best_vars is not None
    return Seed(IceQuiver(s.quiver.n, s.quiver.m, matrix), best_vars)


def _vars_key(vs: Sequence[LaurentPoly]) -> tuple:
    return tuple(v.sort_key() for v in vs)


@dataclass(frozen=True)
class ExchangeGraph:
    seeds: tuple[Seed, ...]  # canonical seeds in discovery order
    edges: frozenset[tuple[int, int]]  # sorted index pairs, one per mutation
    complete: bool

    @property
    def degrees(self) -> list[int]:
        deg = [0] * len(self.seeds)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def exchange_graph(q: IceQuiver, budget: int = DEFAULT_BUDGET) -> ExchangeGraph:
    """Breadth-first closure of the initial seed under mutation."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    start = seed_canonical(initial_seed(q))
    index: dict[tuple, int] = {start.key(): 0}
    seeds: list[Seed] = [start]
    edges: set[tuple[int, int]] = set()
    frontier = [0]
    complete = True
    while frontier and complete:
        fresh: list[int] = []
        for idx in frontier:
            s = seeds[idx]
            for k in range(1, q.n + 1):
                t = seed_canonical(mutate_seed(s, k))
                key = t.key()
                j = index.get(key)
                if j is None:
                    if len(seeds) >= budget:
                        complete = False
                        break
                    j = len(seeds)
                    index[key] = j
                    seeds.append(t)
                    fresh.append(j)
                edges.add((min(idx, j), max(idx, j)))
            if not complete:
                break
        frontier = fresh
    return ExchangeGraph(tuple(seeds), frozenset(edges), complete)


def cluster_variables(
    q: IceQuiver, budget: int = DEFAULT_BUDGET
) -> tuple[frozenset[LaurentPoly], bool]:
    """All mutable-position variables over the explored exchange graph."""
    graph = exchange_graph(q, budget)
    out: set[LaurentPoly] = set()
    for s in graph.seeds:
        out.update(s.vars[: q.n])
    return frozenset(out), graph.complete


def denominator_vector(p: LaurentPoly, n: int) -> tuple[int, ...]:
    """Exponent tuple of the monomial denominator in the first n variables.

    Initial variables get -e_i by convention; any other cluster variable gets
    d_i = max(0, -min exponent of x_i over the terms).
    """
    for i in range(min(n, p.nvars)):
        if p == LaurentPoly.variable(i, p.nvars):
            return tuple(-1 if j == i else 0 for j in range(n))
    mins = p.min_exponents()
    return tuple(max(0, -mins[i]) for i in range(n))


def cluster_monomial(s: Seed, exponents: Sequence[int]) -> LaurentPoly:
    """Product of nonnegative powers of the mutable variables of one seed."""
    if len(exponents) != s.quiver.n:
        raise ValueError("need one exponent per mutable vertex")
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be nonnegative")
    nvars = s.vars[0].nvars if s.vars else s.quiver.m
    result = LaurentPoly.one(nvars)
    for i, e in enumerate(exponents):
        if e:
            result = result * s.vars[i] ** e
    return result


# -- Y-seeds -------------------------------------------------------------


@dataclass(frozen=True)
class YSeed:
    quiver: IceQuiver
    vars: tuple[RationalFunc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vars", tuple(self.vars))
        if self.quiver.m != self.quiver.n:
            raise ValueError("Y-seeds live on good quivers")
        if len(self.vars) != self.quiver.n:
            raise ValueError("need one variable per vertex")


def initial_yseed(q: IceQuiver) -> YSeed:
    return YSeed(q, tuple(RationalFunc.variable(i, q.n) for i in range(q.n)))


def mutate_yseed(s: YSeed, k: int) -> YSeed:
    """Y-variable mutation: invert at k, multiply neighbors by (1+v_k)
    factors according to arrow direction and multiplicity."""
    q = s.quiver
    if not 1 <= k <= q.n:
        raise ValueError(f"vertex {k} out of range 1..{q.n}")
    kk = k - 1
    vk = s.vars[kk]
    one = RationalFunc.one(vk.nvars)
    new_vars = list(s.vars)
    new_vars[kk] = vk.inverse()
    for i in range(q.n):
        if i == kk:
            continue
        into_k = q.b[i][kk]
        if into_k > 0:  # arrows i -> k
            new_vars[i] = s.vars[i] * (one + vk) ** into_k
        elif into_k < 0:  # arrows k -> i
            new_vars[i] = s.vars[i] * (one + vk.inverse()) ** into_k
    return YSeed(q.mutate(k), tuple(new_vars))


def mutate_yseed_sequence(s: YSeed, ks: Iterable[int]) -> YSeed:
    for k in ks:
        s = mutate_yseed(s, k)
    return s


# -- rank-2 recurrence ------------------------------------------------------


_RANK2_CACHE: dict[tuple[int, int], dict[int, LaurentPoly]] = {}


def _rank2_laurent(b: int, c: int, m: int) -> LaurentPoly:
    """Memoized forward/backward recurrence over exact Laurent arithmetic.

    Every value is a Laurent polynomial, so the recurrence divisions go
    through divide_exact and any failure is a loud bug.
    """
    if b < 1 or c < 1:
        raise ValueError("parameters must be positive")
    cache = _RANK2_CACHE.setdefault(
        (b, c), {1: LaurentPoly.variable(0, 2), 2: LaurentPoly.variable(1, 2)}
    )
    if m in cache:
        return cache[m]

    def exponent(mid: int) -> int:
        return b if mid % 2 else c

    if m > 2:
        top = max(cache)
        while top < m:
            nxt = (cache[top] ** exponent(top) + 1).divide_exact(cache[top - 1])
            cache[top + 1] = nxt
            top += 1
    else:
        bottom = min(cache)
        while bottom > m:
            prev = (cache[bottom] ** exponent(bottom) + 1).divide_exact(
                cache[bottom + 1]
            )
            cache[bottom - 1] = prev
            bottom -= 1
    return cache[m]


def rank2_variable(b: int, c: int, m: int) -> RationalFunc:
    """The rank-2 cluster variable x_m in the two initial variables.

    The sequence obeys x_{m-1} x_{m+1} = x_m^b + 1 for m odd and
    x_m^c + 1 for m even, extended forwards and backwards from x_1, x_2.
    """
    return RationalFunc.from_laurent(_rank2_laurent(b, c, m))


def rank2_variable_set(b: int, c: int, limit: int = 64) -> frozenset[RationalFunc]:
    """Distinct values of x_m over a symmetric index window of size ~2*limit."""
    return frozenset(rank2_variable(b, c, m) for m in range(1 - limit, limit + 1))
