from __future__ import annotations

import pytest

from amas.roots import (
    DynkinType,
    cartan_matrix,
    coxeter_number,
    highest_root,
    incidence_matrix,
    positive_roots,
    root_system,
)

ALL_SUPPORTED = [
    DynkinType("A", n) for n in range(1, 9)
] + [DynkinType("D", n) for n in range(4, 9)] + [
    DynkinType("E", 6),
    DynkinType("E", 7),
    DynkinType("E", 8),
]

# Independent second source for the Coxeter numbers, used only here.
COXETER_TABLE = {
    **{DynkinType("A", n): n + 1 for n in range(1, 9)},
    **{DynkinType("D", n): 2 * n - 2 for n in range(4, 9)},
    DynkinType("E", 6): 12,
    DynkinType("E", 7): 18,
    DynkinType("E", 8): 30,
}


class TestTypes:
    def test_legal_ranges(self):
        with pytest.raises(ValueError):
            DynkinType("A", 0)
        with pytest.raises(ValueError):
            DynkinType("D", 3)
        with pytest.raises(ValueError):
            DynkinType("E", 9)
        with pytest.raises(ValueError):
            DynkinType("B", 2)

    def test_parse(self):
        assert DynkinType.parse("A3") == DynkinType("A", 3)
        assert DynkinType.parse("e6") == DynkinType("E", 6)
        with pytest.raises(ValueError):
            DynkinType.parse("F4")


class TestPositiveRoots:
    def test_a2(self):
        assert set(positive_roots(DynkinType("A", 2))) == {(1, 0), (0, 1), (1, 1)}

    def test_a1(self):
        assert positive_roots(DynkinType("A", 1)) == ((1,),)

    def test_d4_count(self):
        assert len(positive_roots(DynkinType("D", 4))) == 12

    def test_all_coordinates_nonnegative(self):
        for t in ALL_SUPPORTED:
            for root in positive_roots(t):
                assert all(c >= 0 for c in root)

    def test_count_matches_coxeter_identity(self):
        for t in ALL_SUPPORTED:
            assert 2 * len(positive_roots(t)) == coxeter_number(t) * t.rank

    def test_rank_cap(self):
        with pytest.raises(ValueError):
            positive_roots(DynkinType("A", 9))


class TestCoxeter:
    def test_a1(self):
        assert coxeter_number(DynkinType("A", 1)) == 2

    def test_a2(self):
        assert coxeter_number(DynkinType("A", 2)) == 3

    def test_d4(self):
        assert coxeter_number(DynkinType("D", 4)) == 6

    def test_against_independent_table(self):
        for t, h in COXETER_TABLE.items():
            assert coxeter_number(t) == h


class TestIncidence:
    def test_a2(self):
        assert incidence_matrix(DynkinType("A", 2)) == ((0, 1), (1, 0))

    def test_a1(self):
        assert incidence_matrix(DynkinType("A", 1)) == ((0,),)

    def test_d4_row_sums(self):
        a = incidence_matrix(DynkinType("D", 4))
        assert tuple(sum(row) for row in a) == (1, 3, 1, 1)

    def test_cartan_relation(self):
        for t in ALL_SUPPORTED:
            cartan = cartan_matrix(t)
            a = incidence_matrix(t)
            for i in range(t.rank):
                for j in range(t.rank):
                    expected = 2 if i == j else -a[i][j]
                    assert cartan[i][j] == expected

    def test_symmetry(self):
        for t in ALL_SUPPORTED:
            a = incidence_matrix(t)
            assert a == tuple(tuple(row) for row in zip(*a))


class TestHighestRoot:
    def test_unique_and_maximal(self):
        for t in ALL_SUPPORTED:
            top = highest_root(t)
            assert top in positive_roots(t)
            assert sum(top) == max(sum(r) for r in positive_roots(t))

    def test_d4_center_two(self):
        assert highest_root(DynkinType("D", 4)) == (1, 2, 1, 1)


class TestRootSystem:
    def test_bundle(self):
        rs = root_system(DynkinType("A", 2))
        assert rs.coxeter == 3
        assert len(rs.positive_roots) == 3
        assert rs.cartan == ((2, -1), (-1, 2))
        assert rs.incidence == ((0, 1), (1, 0))
