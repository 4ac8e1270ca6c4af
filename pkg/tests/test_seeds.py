from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amas.laurent import InexactDivision, LaurentPoly
from amas.quiver import IceQuiver
from amas.rational import RationalFunc
from amas.roots import DynkinType, positive_roots
from amas.seeds import (
    cluster_monomial,
    cluster_variables,
    denominator_vector,
    exchange_graph,
    initial_seed,
    initial_yseed,
    mutate_seed,
    mutate_seed_sequence,
    mutate_yseed,
    mutate_yseed_sequence,
    rank2_variable,
    rank2_variable_set,
    seed_canonical,
)

from .conftest import random_good_quiver


def xvar(i: int, nvars: int) -> LaurentPoly:
    return LaurentPoly.variable(i, nvars)


class TestSeedMutation:
    def test_a3_first_display(self, a3):
        s = mutate_seed(initial_seed(a3), 1)
        assert s.quiver == IceQuiver.from_arrows(3, [(2, 1), (2, 3)])
        x1, x2, x3 = (xvar(i, 3) for i in range(3))
        assert s.vars == ((1 + x2).divide_exact(x1), x2, x3)

    def test_a3_second_display(self, a3):
        s = mutate_seed(initial_seed(a3), 2)
        assert s.quiver == IceQuiver.from_arrows(3, [(2, 1), (3, 2), (1, 3)])
        x1, x2, x3 = (xvar(i, 3) for i in range(3))
        assert s.vars == (x1, (x1 + x3).divide_exact(x2), x3)

    def test_involution(self, a3, d4):
        for q in (a3, d4):
            s = initial_seed(q)
            for k in range(1, q.n + 1):
                assert mutate_seed(mutate_seed(s, k), k) == s

    def test_frozen_variables_participate(self):
        # Ice A2 with one coefficient: exchange picks up the frozen variable.
        q = IceQuiver.from_arrows(3, [(1, 2), (3, 1)], n=2)
        s = mutate_seed(initial_seed(q), 1)
        x1, x2, x3 = (xvar(i, 3) for i in range(3))
        assert s.vars[0] == (x2 + x3).divide_exact(x1)


class TestSeedCanonical:
    def test_relabeling_invariance(self):
        rng = random.Random(20)
        for _ in range(30):
            q = random_good_quiver(rng, max_n=4, max_mult=2)
            s = mutate_seed_sequence(
                initial_seed(q),
                [rng.randint(1, q.n) for _ in range(rng.randint(0, 4))],
            )
            perm = list(range(q.n))
            rng.shuffle(perm)
            b = [[0] * q.n for _ in range(q.n)]
            for i in range(q.n):
                for j in range(q.n):
                    b[perm[i]][perm[j]] = s.quiver.b[i][j]
            relabeled_vars = [None] * q.n
            for old, new in enumerate(perm):
                relabeled_vars[new] = s.vars[old]
            relabeled = type(s)(
                IceQuiver(q.n, q.n, tuple(tuple(row) for row in b)),
                tuple(relabeled_vars),
            )
            assert seed_canonical(s) == seed_canonical(relabeled)

    def test_pentagon_seeds_pairwise_distinct(self, a2):
        seeds = [initial_seed(a2)]
        for k in (1, 2, 1, 2):
            seeds.append(mutate_seed(seeds[-1], k))
        canon = [seed_canonical(s) for s in seeds]
        for i in range(5):
            for j in range(i + 1, 5):
                # Brute force over both relabelings of two vertices.
                iso = False
                for perm in permutations(range(2)):
                    b = [[0] * 2 for _ in range(2)]
                    for a in range(2):
                        for bb in range(2):
                            b[perm[a]][perm[bb]] = canon[i].quiver.b[a][bb]
                    vars_p = [None, None]
                    for old, new in enumerate(perm):
                        vars_p[new] = canon[i].vars[old]
                    if (
                        tuple(tuple(row) for row in b) == canon[j].quiver.b
                        and tuple(vars_p) == canon[j].vars
                    ):
                        iso = True
                assert not iso
                assert canon[i] != canon[j]

    def test_same_quiver_different_vars_differ(self, a2):
        s = initial_seed(a2)
        t = mutate_seed_sequence(s, (1, 2, 1, 2, 1))  # same cluster set, swapped
        assert seed_canonical(s) == seed_canonical(t)
        u = mutate_seed(s, 1)
        assert seed_canonical(s) != seed_canonical(u)


class TestExchangeGraph:
    def test_a2_pentagon_cycle(self, a2):
        g = exchange_graph(a2)
        assert len(g.seeds) == 5
        assert len(g.edges) == 5
        assert all(d == 2 for d in g.degrees)
        # A 2-regular connected graph on 5 vertices is the 5-cycle.
        adj = {i: set() for i in range(5)}
        for i, j in g.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert seen == set(range(5))

    def test_a3_associahedron(self, a3):
        g = exchange_graph(a3)
        assert len(g.seeds) == 14
        assert len(g.edges) == 21
        assert set(g.degrees) == {3}

    def test_a1_segment(self):
        a1 = IceQuiver.empty(1)
        g = exchange_graph(a1)
        assert len(g.seeds) == 2 and len(g.edges) == 1

    def test_n_regular_when_complete(self, d4):
        g = exchange_graph(d4)
        assert g.complete and set(g.degrees) == {4}

    def test_budget_flag(self, a3):
        g = exchange_graph(a3, budget=3)
        assert not g.complete and len(g.seeds) == 3


class TestClusterVariables:
    def test_a2_exact_set(self, a2):
        variables, complete = cluster_variables(a2)
        assert complete
        x1, x2 = xvar(0, 2), xvar(1, 2)
        expected = {
            x1,
            x2,
            (1 + x2).divide_exact(x1),
            (x1 + 1 + x2).divide_exact(x1 * x2),
            (1 + x1).divide_exact(x2),
        }
        assert set(variables) == expected

    def test_a3_count(self, a3):
        variables, complete = cluster_variables(a3)
        assert complete and len(variables) == 9

    def test_d4_count(self, d4):
        variables, complete = cluster_variables(d4)
        assert complete and len(variables) == 16


class TestDenominatorVectors:
    def test_pentagon_values(self, a2):
        x1, x2 = xvar(0, 2), xvar(1, 2)
        x4 = (x1 + 1 + x2).divide_exact(x1 * x2)
        x3 = (1 + x2).divide_exact(x1)
        assert denominator_vector(x4, 2) == (1, 1)
        assert denominator_vector(x3, 2) == (1, 0)
        assert denominator_vector(x2, 2) == (0, -1)

    def test_bijection_with_positive_roots(self, a2, a3, d4):
        for q, t in ((a2, DynkinType("A", 2)), (a3, DynkinType("A", 3)), (d4, DynkinType("D", 4))):
            variables, complete = cluster_variables(q)
            assert complete
            initial = {xvar(i, q.n) for i in range(q.n)}
            dvecs = sorted(denominator_vector(v, q.n) for v in set(variables) - initial)
            assert dvecs == sorted(positive_roots(t))


class TestClusterMonomials:
    def test_zero_exponents(self, a2):
        assert cluster_monomial(initial_seed(a2), (0, 0)).is_one

    def test_initial_monomial(self, a2):
        x1, x2 = xvar(0, 2), xvar(1, 2)
        assert cluster_monomial(initial_seed(a2), (2, 1)) == x1 * x1 * x2

    def test_after_mutation(self, a2):
        s = mutate_seed(initial_seed(a2), 1)
        x1, x2 = xvar(0, 2), xvar(1, 2)
        assert cluster_monomial(s, (1, 1)) == (1 + x2) * x2.divide_exact(x1)

    def test_negative_exponent_rejected(self, a2):
        with pytest.raises(ValueError):
            cluster_monomial(initial_seed(a2), (-1, 0))


class TestLaurentPhenomenon:
    QUIVER_BUILDERS = {
        "a3": lambda: IceQuiver.from_arrows(3, [(1, 2), (2, 3)]),
        "d4": lambda: IceQuiver.from_arrows(4, [(1, 2), (2, 3), (2, 4)]),
        "kronecker": lambda: IceQuiver(2, 2, ((0, 2), (-2, 0))),
        "triangle": lambda: IceQuiver.from_arrows(3, [(2, 1), (1, 3), (3, 2)]),
    }

    def test_no_inexact_division_and_positive_coefficients(self):
        # Shortened version of the acceptance run; same property.
        rng = random.Random(21)
        for name, build in self.QUIVER_BUILDERS.items():
            q = build()
            for _ in range(20):
                seed = initial_seed(q)
                for _ in range(rng.randint(1, 8)):
                    k = rng.randint(1, q.n)
                    seed = mutate_seed(seed, k)  # raises InexactDivision on a bug
                for v in seed.vars:
                    assert all(c > 0 for _, c in v.terms), name


class TestYSeeds:
    def test_chain_first_step(self, a2):
        s = mutate_yseed(initial_yseed(a2), 1)
        y1, y2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert s.quiver == IceQuiver.from_arrows(2, [(2, 1)])
        assert s.vars == (y1.inverse(), y1 * y2 / (1 + y1))

    def test_chain_second_step(self, a2):
        s = mutate_yseed_sequence(initial_yseed(a2), (1, 2))
        y1, y2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert s.quiver == IceQuiver.from_arrows(2, [(1, 2)])
        assert s.vars[0] == y2 / (1 + y1 + y1 * y2)
        # The product rule forces (1 + y1)/(y1 y2) here; the once-displayed
        # (1 + y1)/y2 is inconsistent with the involution and the chain's end.
        assert s.vars[1] == (1 + y1) / (y1 * y2)

    def test_full_chain_ends_swapped(self, a2):
        s = mutate_yseed_sequence(initial_yseed(a2), (1, 2, 1, 2, 1))
        y1, y2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert s.quiver == IceQuiver.from_arrows(2, [(2, 1)])
        assert s.vars == (y2, y1)

    def test_involution_everywhere(self):
        rng = random.Random(22)
        for _ in range(40):
            q = random_good_quiver(rng, max_n=4, max_mult=2)
            s = initial_yseed(q)
            for k in range(1, q.n + 1):
                assert mutate_yseed(mutate_yseed(s, k), k).vars == s.vars

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_involution_property(self, data):
        # Multiplicities capped at 1 and short walks: Y-variable degrees
        # explode exponentially along multi-arrow mutation sequences.
        n = data.draw(st.integers(1, 4))
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                e = data.draw(st.integers(-1, 1))
                b[i][j] = e
                b[j][i] = -e
        q = IceQuiver(n, n, tuple(tuple(row) for row in b))
        sequence = data.draw(st.lists(st.integers(1, n), max_size=2))
        s = mutate_yseed_sequence(initial_yseed(q), sequence)
        k = data.draw(st.integers(1, n))
        again = mutate_yseed(mutate_yseed(s, k), k)
        assert again.vars == s.vars and again.quiver == s.quiver

    def test_multiplicity_exponents(self, kronecker):
        s = mutate_yseed(initial_yseed(kronecker), 1)
        y1, y2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert s.vars[1] == y2 / ((1 + y1.inverse()) ** 2)


class TestRank2:
    def test_a2_values(self):
        x1, x2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert rank2_variable(1, 1, 5) == (1 + x1) / x2
        assert rank2_variable(1, 1, 6) == x1
        assert rank2_variable(1, 1, 7) == x2

    def test_first_step_uses_even_exponent(self):
        x1, x2 = RationalFunc.variable(0, 2), RationalFunc.variable(1, 2)
        assert rank2_variable(2, 2, 3) == (x2 * x2 + 1) / x1
        assert rank2_variable(1, 2, 3) == (x2 * x2 + 1) / x1
        assert rank2_variable(2, 1, 3) == (x2 + 1) / x1

    def test_backward_recurrence_periodicity(self):
        assert rank2_variable(1, 1, -1) == rank2_variable(1, 1, 4)
        assert rank2_variable(1, 1, 0) == rank2_variable(1, 1, 5)

    def test_finite_sets(self):
        assert len(rank2_variable_set(1, 1, limit=30)) == 5
        assert len(rank2_variable_set(1, 2, limit=30)) == 6
        assert len(rank2_variable_set(1, 3, limit=30)) == 8

    def test_2_2_first_values_distinct(self):
        values = [rank2_variable(2, 2, m) for m in range(1, 21)]
        assert len(set(values)) == 20

    def test_laurent_property(self):
        # Every rank-2 variable is a Laurent polynomial: monomial denominator.
        for (b, c) in ((1, 1), (1, 2), (1, 3), (2, 2)):
            for m in range(-6, 9):
                value = rank2_variable(b, c, m)
                assert value.as_laurent() is not None, (b, c, m)
