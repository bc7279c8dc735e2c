import itertools

import pytest

from coarse.bornologies import BornologyPresentation
from coarse.windows import Window
from orders.linear import LinearOrder


def orders_on(size):
    """Every linear order of the window 0..size-1."""
    window = Window.build(range(size))
    for sequence in itertools.permutations(range(size)):
        yield LinearOrder(window, sequence)


@pytest.fixture
def line6():
    return Window.build(range(6))


@pytest.fixture
def natural6(line6):
    return LinearOrder.natural(line6)


@pytest.fixture
def chain_bornology(line6):
    return BornologyPresentation.from_sets(line6, [[2, 3], [1, 2, 3, 4], range(6)])


@pytest.fixture
def centred_line():
    """-2 < -1 < 0 < 1 < 2 split between -1 and 0."""
    window = Window.build([-2, -1, 0, 1, 2])
    return LinearOrder.natural(window, split=(-1, 0))
