import random

import pytest

from osdeform.matroid import Matroid, boolean, graphic, uniform
from osdeform.ncalg import GroundOrder

# vertices 0..3; with this edge order the natural order is supersolvable
K4_EDGES = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def k4():
    return graphic(K4_EDGES)


def example124():
    """S = {1,2,3,4} with the single circuit {1,2,4} (0-based {0,1,3})."""
    return Matroid(4, [[0, 1, 3]])


TEST_MATROIDS = {
    "U23": uniform(2, 3),
    "U24": uniform(2, 4),
    "U34": uniform(3, 4),
    "U35": uniform(3, 5),
    "ex124": example124(),
    "K4": k4(),
}


def three_orders(n, seed=0):
    """Natural, reversed and one further shuffled order (n >= 3)."""
    rng = random.Random(seed)
    orders = [GroundOrder.natural(n), GroundOrder.natural(n).reversed()]
    while len(orders) < 3:
        seq = list(range(n))
        rng.shuffle(seq)
        o = GroundOrder.from_sequence(seq)
        if o not in orders:
            orders.append(o)
    return orders


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=sorted(TEST_MATROIDS))
def named_matroid(request):
    return request.param, TEST_MATROIDS[request.param]


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
