import pytest

from graphstate.graphs import WeightedGraph


@pytest.fixture
def chain() -> WeightedGraph:
    """Three-node chain with couplings 1 and 2."""
    return WeightedGraph(3, ((0, 1, 1.0), (1, 2, 2.0)))


@pytest.fixture
def triangle() -> WeightedGraph:
    return WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)))


@pytest.fixture
def square() -> WeightedGraph:
    return WeightedGraph(4, ((0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)))


@pytest.fixture
def single_edge() -> WeightedGraph:
    return WeightedGraph(2, ((0, 1, 1.0),))


@pytest.fixture
def edgeless() -> WeightedGraph:
    return WeightedGraph(3, ())
