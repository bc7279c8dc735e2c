import pytest
from hypothesis import strategies as st

from coarse.entourages import Entourage
from coarse.windows import Window
from search.constraints import ConstraintScenario

FIVE = Window.build(range(5))


@st.composite
def scenarios(draw, window=FIVE):
    """Random scenarios with at most ten pairs on a five-point window."""
    pairs = draw(st.lists(st.sampled_from(list(window.pairs())), min_size=1, max_size=10, unique=True))
    links = draw(st.sets(st.tuples(st.sampled_from(pairs), st.sampled_from(pairs))))
    edges = draw(st.sets(st.tuples(st.integers(0, window.size - 1), st.integers(0, window.size - 1))))
    requirement = Entourage.from_pairs(window, edges | {(b, a) for a, b in edges})
    return ConstraintScenario.build(
        window, pairs, lambda a, b: (a, b) in links or (b, a) in links, requirement,
    )


@pytest.fixture
def line3():
    return Window.build([0, 1, 2])


@pytest.fixture
def agreeing_pairs(line3):
    """{0, 1} and {1, 2} are close and must pick the same point."""
    return ConstraintScenario.build(
        line3, [0b011, 0b110], lambda a, b: True, Entourage.diagonal(line3),
    )
