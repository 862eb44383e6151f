import pytest

from qch import make_space, random_adapted_change


@pytest.fixture
def space2():
    return make_space(2)


@pytest.fixture
def space3():
    return make_space(3)


@pytest.fixture
def adapted3():
    return random_adapted_change(make_space(3), 7)
