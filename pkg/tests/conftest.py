import pytest

from flowenum.core import Flow

from helpers import make_network

A, B, C, D, E = range(5)


@pytest.fixture
def zerocycle_network():
    # Five-node instance with one zero-cost residual triangle through c, d, e.
    return make_network(
        5,
        [
            (A, B, 0, 1, 8),
            (A, C, 0, 1, 3),
            (A, D, 0, 4, 4),
            (B, D, 0, 5, 5),
            (C, D, 0, 1, 1),
            (C, E, 0, 4, 2),
            (D, E, 0, 3, 1),
        ],
        (3, 5, 2, -6, -4),
    )


@pytest.fixture
def zerocycle_flow():
    return Flow((0, 0, 3, 5, 0, 2, 2))


@pytest.fixture
def zerocycle_augmented_flow():
    return Flow((0, 0, 3, 5, 1, 1, 3))


@pytest.fixture
def dfs_demo_network():
    # The zero-cycle instance without the a->b arc; its residual graph is
    # the DFS classification showcase.
    return make_network(
        5,
        [
            (A, C, 0, 1, 3),
            (A, D, 0, 4, 4),
            (B, D, 0, 5, 5),
            (C, D, 0, 1, 1),
            (C, E, 0, 4, 2),
            (D, E, 0, 3, 1),
        ],
        (3, 5, 2, -6, -4),
    )


@pytest.fixture
def dfs_demo_flow():
    return Flow((0, 3, 5, 0, 2, 2))


@pytest.fixture
def eleven_optima_network():
    # Eleven optimal flows: the c->d arc spans 0..10 inside one 0-cycle.
    return make_network(
        5,
        [
            (A, B, 0, 1, 20),
            (A, C, 0, 1, 50),
            (A, D, 0, 4, 0),
            (B, D, 0, 5, 0),
            (C, D, 0, 10, 0),
            (C, E, 0, 14, 0),
            (D, E, 0, 14, 0),
        ],
        (0, 5, 12, -3, -14),
    )


@pytest.fixture
def eleven_optima_flow():
    return Flow((0, 0, 0, 5, 0, 12, 2))


@pytest.fixture
def blocked_cycle_network():
    # Same zero-cost cycle, but the d->e capacity blocks every augmentation.
    return make_network(
        5,
        [
            (A, B, 0, 1, 20),
            (A, C, 0, 1, 50),
            (A, D, 0, 4, 0),
            (B, D, 0, 5, 0),
            (C, D, 0, 10, 0),
            (C, E, 0, 2, 0),
            (D, E, 0, 2, 0),
        ],
        (0, 5, 2, -3, -4),
    )


@pytest.fixture
def blocked_cycle_flow():
    return Flow((0, 0, 0, 5, 0, 2, 2))


@pytest.fixture
def chain3_network():
    # Two routings only: via the middle node (cost 1) or direct (cost 2).
    return make_network(
        3,
        [(0, 1, 0, 1, 0), (1, 2, 0, 1, 1), (0, 2, 0, 1, 2)],
        (1, 0, -1),
    )


@pytest.fixture
def forced_network():
    # Every arc pinned by lower == upper; the flow polyhedron is one point.
    return make_network(
        3,
        [(0, 1, 2, 2, 1), (1, 2, 2, 2, 1)],
        (2, 0, -2),
    )


@pytest.fixture
def twocycle_network():
    # Anti-parallel zero-cost pair: circulations 0, 1, 2 -> three flows.
    return make_network(
        2,
        [(0, 1, 0, 2, 0), (1, 0, 0, 2, 0)],
        (0, 0),
    )
