import random

import pytest
from hypothesis import strategies as st

from monopos.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_connected(rng, n, p=None):
    from monopos.families import random_connected_graph

    return random_connected_graph(n, rng, p)
