import random

import pytest

from gthick.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20240611)
