import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from noetherlab import SampleUniverse, explicit_graph, vertex_point


def explicit_universe(n, edges):
    return SampleUniverse(explicit_graph(n, edges), [vertex_point(i) for i in range(n)])


@pytest.fixture
def triangle():
    return explicit_universe(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return explicit_universe(3, [(0, 1), (1, 2)])


@pytest.fixture
def edgeless2():
    return explicit_universe(2, [])
