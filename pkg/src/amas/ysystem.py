"""Exact iteration of the Y-system attached to a pair of Dynkin diagrams.

Variables Y[i, i', t] sit on the product of the two diagrams and satisfy

    Y[i,i',t-1] * Y[i,i',t+1] =
        prod_j (1 + Y[j,i',t])^a[i][j] / prod_j' (1 + 1/Y[i,j',t])^a'[i'][j']

with a, a' the 0/1 incidence matrices.  The equation couples a node at times
t-1/t+1 only to its diagram neighbors at time t, and adjacency flips the
bipartition class of a node, so the nodes whose class-plus-time has a fixed
parity form a closed subsystem; the default initialization tracks just that
subsystem (one indeterminate per node).  For path-numbered A diagrams the
bipartition class of i is the parity of i itself.  A full mode with two
indeterminates per node iterates both parity classes at once for
cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import RationalFunc
from .roots import DynkinType, coxeter_number, incidence_matrix

Node = tuple[int, int]  # 1-based (i, i')
Slice = dict[Node, RationalFunc]


def bipartition_classes(t: DynkinType) -> tuple[int, ...]:
    """0/1 class per vertex with adjacent vertices in opposite classes."""
    a = incidence_matrix(t)
    color = [-1] * t.rank
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in range(t.rank):
            if a[v][w] and color[w] < 0:
                color[w] = 1 - color[v]
                queue.append(w)
    assert all(c >= 0 for c in color)
    return tuple(color)


def _node_class(
    colors: tuple[int, ...], colors_prime: tuple[int, ...], node: Node
) -> int:
    i, ip = node
    return (colors[i - 1] + colors_prime[ip - 1]) % 2


class PeriodNotFound(RuntimeError):
    """No period within the step bound; indicates a bug, never expected."""


@dataclass(frozen=True)
class YSystemState:
    delta: DynkinType
    delta_prime: DynkinType
    t: int
    eps: int  # nodes whose bipartition class + t == eps (mod 2) sit in slice_curr
    slice_prev: Slice  # values at time t - 1
    slice_curr: Slice  # values at time t
    full: bool

    @property
    def nodes(self) -> list[Node]:
        return _nodes(self.delta, self.delta_prime)


def _nodes(delta: DynkinType, delta_prime: DynkinType) -> list[Node]:
    return [
        (i, ip)
        for i in range(1, delta.rank + 1)
        for ip in range(1, delta_prime.rank + 1)
    ]


def variable_names(
    delta: DynkinType, delta_prime: DynkinType, full: bool = False
) -> tuple[str, ...]:
    nodes = _nodes(delta, delta_prime)
    if not full:
        return tuple(f"y{i}_{ip}" for i, ip in nodes)
    return tuple(f"y{i}_{ip}_{t}" for t in (0, 1) for i, ip in nodes)


def ysystem_init(
    delta: DynkinType, delta_prime: DynkinType, full: bool = False
) -> YSystemState:
    """Fresh indeterminates: parity mode seeds even-class nodes at t=0 and
    odd-class nodes at t=1; full mode seeds every node at both t=0 and t=1."""
    nodes = _nodes(delta, delta_prime)
    if full:
        nvars = 2 * len(nodes)
        prev = {
            node: RationalFunc.variable(idx, nvars) for idx, node in enumerate(nodes)
        }
        curr = {
            node: RationalFunc.variable(len(nodes) + idx, nvars)
            for idx, node in enumerate(nodes)
        }
        return YSystemState(delta, delta_prime, 1, 0, prev, curr, True)
    colors = bipartition_classes(delta)
    colors_prime = bipartition_classes(delta_prime)
    nvars = len(nodes)
    prev: Slice = {}
    curr: Slice = {}
    for idx, node in enumerate(nodes):
        var = RationalFunc.variable(idx, nvars)
        if _node_class(colors, colors_prime, node) == 0:
            prev[node] = var  # value at t = 0
        else:
            curr[node] = var  # value at t = 1
    return YSystemState(delta, delta_prime, 1, 0, prev, curr, False)


def ysystem_step(st: YSystemState) -> YSystemState:
    """Advance one time unit, computing the slice at t+1 exactly."""
    a = incidence_matrix(st.delta)
    ap = incidence_matrix(st.delta_prime)
    colors = bipartition_classes(st.delta)
    colors_prime = bipartition_classes(st.delta_prime)
    n, np_ = st.delta.rank, st.delta_prime.rank
    t_next = st.t + 1
    fresh: Slice = {}
    for node in _nodes(st.delta, st.delta_prime):
        i, ip = node
        if not st.full and (_node_class(colors, colors_prime, node) + t_next) % 2 != st.eps:
            continue
        prev_val = st.slice_prev.get(node)
        if prev_val is None:
            raise AssertionError(f"missing value for {node} at time {st.t - 1}")
        nvars = prev_val.nvars
        numerator = RationalFunc.one(nvars)
        for j in range(1, n + 1):
            if a[i - 1][j - 1]:
                neighbor = st.slice_curr.get((j, ip))
                if neighbor is None:
                    raise AssertionError(f"missing value for ({j},{ip}) at time {st.t}")
                numerator = numerator * (1 + neighbor)
        denominator = RationalFunc.one(nvars)
        for jp in range(1, np_ + 1):
            if ap[ip - 1][jp - 1]:
                neighbor = st.slice_curr.get((i, jp))
                if neighbor is None:
                    raise AssertionError(f"missing value for ({i},{jp}) at time {st.t}")
                denominator = denominator * (1 + neighbor.inverse())
        fresh[node] = numerator / (denominator * prev_val)
    return YSystemState(
        st.delta, st.delta_prime, t_next, st.eps, st.slice_curr, fresh, st.full
    )


def _snapshot(st: YSystemState) -> tuple:
    return (
        tuple(sorted(st.slice_prev.items())),
        tuple(sorted(st.slice_curr.items())),
    )


@dataclass(frozen=True)
class PeriodReport:
    period: int
    bound: int  # 2 (h + h')
    divides: bool


def ysystem_period(
    delta: DynkinType,
    delta_prime: DynkinType,
    max_steps: int | None = None,
    full: bool = False,
) -> PeriodReport:
    """Minimal P with state(t+P) = state(t), checked at t = 0 and t = 1.

    ``max_steps`` defaults to 2(h+h') + 1, which the periodicity bound makes
    sufficient; running past it without a match raises PeriodNotFound.
    """
    bound = 2 * (coxeter_number(delta) + coxeter_number(delta_prime))
    if max_steps is None:
        max_steps = bound + 1
    if max_steps < 2:
        raise ValueError("max_steps too small")
    st0 = ysystem_init(delta, delta_prime, full)
    base = _snapshot(st0)
    st1 = ysystem_step(st0)
    base_next = _snapshot(st1)
    st = st1
    for step in range(1, max_steps + 1):
        if _snapshot(st) == base:
            if step >= 1:
                after = ysystem_step(st)
                if _snapshot(after) != base_next:
                    raise AssertionError("period holds at t=0 but not at t=1")
            return PeriodReport(step, bound, bound % step == 0)
        st = ysystem_step(st)
    raise PeriodNotFound(
        f"no period up to {max_steps} steps for ({delta}, {delta_prime})"
    )
