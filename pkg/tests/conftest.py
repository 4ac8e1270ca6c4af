from __future__ import annotations

import random

import pytest

from amas.quiver import IceQuiver


@pytest.fixture
def a2() -> IceQuiver:
    return IceQuiver.from_arrows(2, [(1, 2)])


@pytest.fixture
def a3() -> IceQuiver:
    return IceQuiver.from_arrows(3, [(1, 2), (2, 3)])


@pytest.fixture
def d4() -> IceQuiver:
    return IceQuiver.from_arrows(4, [(1, 2), (2, 3), (2, 4)])


@pytest.fixture
def triangle() -> IceQuiver:
    # Cyclically oriented triangle; mutation at 1 reaches its acyclic partner.
    return IceQuiver.from_arrows(3, [(2, 1), (1, 3), (3, 2)])


@pytest.fixture
def kronecker() -> IceQuiver:
    return IceQuiver(2, 2, ((0, 2), (-2, 0)))


def ten_vertex_display_quivers() -> tuple[IceQuiver, IceQuiver, IceQuiver]:
    """The three mutation-equivalent 10-vertex quivers used in reports."""
    q_a = IceQuiver.from_arrows(
        10,
        [
            (2, 1), (1, 3), (3, 2), (4, 2), (2, 5), (5, 3), (3, 6), (5, 4),
            (7, 4), (4, 8), (6, 5), (8, 5), (5, 9), (9, 6), (6, 10), (8, 7),
            (9, 8), (10, 9),
        ],
    )
    q_b = IceQuiver.from_arrows(
        10,
        [
            (10, 1), (9, 2), (3, 4), (4, 6), (9, 4), (5, 7), (10, 5), (6, 7),
            (7, 8), (8, 9),
        ],
    )
    q_c = IceQuiver.from_arrows(
        10,
        [
            (10, 1), (2, 3), (10, 2), (3, 5), (4, 6), (5, 6), (6, 7), (7, 8),
            (8, 9), (9, 10),
        ],
    )
    return q_a, q_b, q_c


def random_good_quiver(rng: random.Random, max_n: int = 6, max_mult: int = 3) -> IceQuiver:
    n = rng.randint(1, max_n)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = rng.randint(-max_mult, max_mult)
            b[i][j] = e
            b[j][i] = -e
    return IceQuiver(n, n, tuple(tuple(row) for row in b))


def random_ice_quiver(rng: random.Random, max_m: int = 6, max_mult: int = 2) -> IceQuiver:
    m = rng.randint(1, max_m)
    n = rng.randint(1, m)
    b = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if i >= n and j >= n:
                continue
            e = rng.randint(-max_mult, max_mult)
            b[i][j] = e
            b[j][i] = -e
    return IceQuiver(n, m, tuple(tuple(row) for row in b))
