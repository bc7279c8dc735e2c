import pytest

from coarse.bornologies import BornologyPresentation
from coarse.entourages import Entourage
from coarse.presentations import metric_grid_presentation
from coarse.windows import Window


@pytest.fixture
def line3():
    return Window.build([0, 1, 2])


@pytest.fixture
def line6():
    return Window.build(range(6))


@pytest.fixture
def near01(line3):
    """Δ ∪ {(0, 1), (1, 0)}."""
    return Entourage.from_pairs(line3, [(0, 1), (1, 0)])


@pytest.fixture
def near12(line3):
    """Δ ∪ {(1, 2), (2, 1)}."""
    return Entourage.from_pairs(line3, [(1, 2), (2, 1)])


@pytest.fixture
def chain_bornology(line6):
    return BornologyPresentation.from_sets(line6, [[2, 3], [1, 2, 3, 4], range(6)])


@pytest.fixture
def line_grid():
    """Integers -8..8 with radii 1, 2, 4; interior -4..4."""
    return metric_grid_presentation(1, 8, [1, 2, 4])


@pytest.fixture
def plane_grid():
    """Sup-metric square of radius 3, radii 1 and 2, interior radius 2."""
    return metric_grid_presentation(2, 3, [1, 2], margin=1)
