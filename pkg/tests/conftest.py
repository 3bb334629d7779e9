import pytest

from leavitt import Graph


@pytest.fixture
def loop_with_exit():
    """Two vertices u, v with a loop f at u and an edge g: u -> v.

    The smallest graph where the ideal of {v} is graded but not regular and
    the quotient by it loses Condition (L).
    """
    return Graph(("u", "v"), (("f", "u", "u"), ("g", "u", "v")))


@pytest.fixture
def path_abc():
    return Graph(("a", "b", "c"), (("e1", "a", "b"), ("e2", "b", "c")))


@pytest.fixture
def edgeless_ab():
    return Graph(("a", "b"), ())


@pytest.fixture
def single_loop():
    return Graph(("w",), (("l", "w", "w"),))


@pytest.fixture
def two_cycle():
    return Graph(("a", "b"), (("e1", "a", "b"), ("e2", "b", "a")))
