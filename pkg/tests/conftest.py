from __future__ import annotations

import pytest

from gonq import Graph

# Six-vertex fixture graph: L, B1, T1, B2, T2, R = 0..5, eight edges.
FIXTURE_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]

# The two divisors of the worked two-chip example on that graph.
FIXTURE_D = [2, -1, -1, 0, 0, 2]
FIXTURE_D_PRIME = [0, 0, 0, 1, 1, 0]


@pytest.fixture
def fixture_graph() -> Graph:
    return Graph(6, FIXTURE_EDGES)


def adjacency_dict(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in range(g.vertex_count)}
