import pytest
from hypothesis import given

from coarse.entourages import Entourage, ball, compose, inverse, restrict, union
from coarse.exceptions import StructuralError
from coarse.windows import Window

from .strategies import entourages


class TestCompose:
    def test_diagonal_is_identity(self, line3):
        diagonal = Entourage.diagonal(line3)

        assert compose(diagonal, diagonal) == diagonal

    def test_composition_follows_first_then_second(self, near01, near12):
        composed = compose(near01, near12)

        assert composed.contains(0, 2)
        assert not composed.contains(2, 0)

    def test_composition_with_inverse_is_symmetric(self, near01):
        composed = compose(near01, inverse(near01))

        assert composed.is_symmetric
        assert {(0, 0), (0, 1), (1, 0), (1, 1)} <= composed.pairs()

    def test_window_mismatch_is_structural(self, near01):
        other = Entourage.diagonal(Window.build(['a', 'b', 'c']))

        with pytest.raises(StructuralError) as error:
            compose(near01, other)

        assert error.value.field == 'window'

    @given(entourages(), entourages(), entourages())
    def test_associative(self, first, second, third):
        assert compose(compose(first, second), third) == compose(first, compose(second, third))

    @given(entourages(), entourages())
    def test_ball_of_composition_is_second_ball_of_first_ball(self, first, second):
        composed = compose(first, second)

        for x in first.window.points:
            assert ball(composed, [x]) == ball(second, ball(first, [x]))

    @given(entourages(), entourages())
    def test_reflexivity_preserved(self, first, second):
        assert compose(first, second).is_reflexive
        assert union(first, second).is_reflexive
        assert inverse(first).is_reflexive


class TestInverse:
    def test_diagonal_is_self_inverse(self, line3):
        assert inverse(Entourage.diagonal(line3)) == Entourage.diagonal(line3)

    def test_transposes_pairs(self, line3):
        relation = Entourage.from_pairs(line3, [(0, 1)])

        assert inverse(relation) == Entourage.from_pairs(line3, [(1, 0)])

    @given(entourages())
    def test_involution(self, relation):
        assert inverse(inverse(relation)) == relation


class TestBall:
    def test_diagonal_ball_is_the_point(self, line3):
        assert ball(Entourage.diagonal(line3), [1]) == {1}

    def test_reads_relation(self, near01):
        assert ball(near01, [1]) == {0, 1}

    def test_union_law(self, near01):
        assert ball(near01, [0, 2]) == ball(near01, [0]) | ball(near01, [2])

    def test_unknown_point_is_structural(self, near01):
        with pytest.raises(StructuralError):
            ball(near01, [7])


class TestRelations:
    def test_from_balls_adds_diagonal(self, line3):
        relation = Entourage.from_balls(line3, {0: [1]})

        assert relation.pairs() == {(0, 0), (0, 1), (1, 1), (2, 2)}

    def test_raw_relation_keeps_missing_diagonal(self, line3):
        relation = Entourage.from_pairs(line3, [(0, 1)], reflexive=False)

        assert not relation.is_reflexive
        assert relation.missing_diagonal() == 0b111

    def test_restrict_to_subspace(self, near01):
        restricted = restrict(near01, [0, 1])

        assert restricted.window.points == (0, 1)
        assert restricted.pairs() == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_full_contains_everything(self, line3, near01):
        assert near01.issubset(Entourage.full(line3))
        assert near01.intersection(Entourage.diagonal(line3)) == Entourage.diagonal(line3)
