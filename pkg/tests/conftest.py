import pytest

from chainbound import poset_from_pairs


@pytest.fixture
def chain3():
    return poset_from_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain2():
    return poset_from_pairs(["a", "b"], [])


@pytest.fixture
def diamond():
    return poset_from_pairs(
        ["bot", "x", "y", "top"],
        [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
    )


@pytest.fixture
def singleton():
    return poset_from_pairs(["a"], [])


@pytest.fixture
def empty():
    return poset_from_pairs([], [])
