import pytest
from hypothesis import given, settings, strategies as st

from coarse.bornologies import BornologyPresentation
from coarse.exceptions import InconclusiveError, PreconditionError, StructuralError
from coarse.hyper import KIND_PAIRS, SelectorMap
from coarse.windows import Window
from orders.derivation import (
    CASE_BOUNDED, CASE_BOUNDED_LEFT, CASE_BOUNDED_RIGHT, CASE_UNBOUNDED_SIDES, derive_order,
    order_from_two_selector, star_constant,
)
from orders.linear import LinearOrder, compare_coverage, interval_bornology, ordinal_sum_shape
from orders.selectors import two_selector_from_order
from search.generators import ordinal_sum_window

from .conftest import orders_on


def _selector(window, choices):
    """2-selector from {(a, b): choice} on point ids."""
    return SelectorMap.from_points(window, KIND_PAIRS, [((a, b), c) for (a, b), c in choices.items()])


def _round_trip_equal(order):
    born = interval_bornology(order)
    derived = order_from_two_selector(two_selector_from_order(order), born)
    return compare_coverage(interval_bornology(derived), born)['equal']


class TestStarConstant:
    def test_chain_element_itself(self, natural6, chain_bornology):
        selector = two_selector_from_order(natural6)

        assert star_constant(selector, 0b001100, chain_bornology) == 0b001100

    def test_singleton_inside_least_element(self, natural6, chain_bornology):
        selector = two_selector_from_order(natural6)

        assert star_constant(selector, 0b000100, chain_bornology) == 0b001100

    def test_bounded_window(self, natural6, line6):
        whole = BornologyPresentation.from_sets(line6, [range(6)])

        assert star_constant(two_selector_from_order(natural6), 0b000011, whole) == 0b111111

    def test_uncovered_set_is_inconclusive(self, natural6, line6):
        born = BornologyPresentation.from_sets(line6, [[2, 3], [1, 2, 3, 4]])

        with pytest.raises(InconclusiveError) as error:
            star_constant(two_selector_from_order(natural6), 0b000011, born)

        assert error.value.witness == {'set': [0, 1]}

    def test_map_without_modulus_fails_precondition(self, natural6, line6):
        born = BornologyPresentation.from_sets(line6, [[2, 3], [1, 2, 3, 4]])
        choices = dict(two_selector_from_order(natural6).choices)
        choices[0b100100] = 5

        with pytest.raises(PreconditionError) as error:
            star_constant(SelectorMap(line6, KIND_PAIRS, choices), 0b001100, born)

        assert not error.value.report['passed']


class TestDeriveOrder:
    def test_chain_bornology_example(self, natural6, chain_bornology):
        derivation = derive_order(two_selector_from_order(natural6), chain_bornology)

        assert derivation.case == CASE_BOUNDED
        assert derivation.coverage['equal']
        assert derivation.order.sequence == (0, 1, 2, 3, 4, 5)
        assert derivation.order.split == (0, 1)
        assert ordinal_sum_shape(derivation.order)

    def test_ordinal_sum_with_canonical_pair(self):
        window, order, born = ordinal_sum_window(2, 3)

        derived = order_from_two_selector(two_selector_from_order(order), born)

        assert derived.as_dict() == {'sequence': ['l1', 'l0', 'r0', 'r1', 'r2'], 'split': ['l1', 'l0']}
        assert ordinal_sum_shape(derived)

    def test_ordinal_sum_with_given_split(self):
        window, order, born = ordinal_sum_window(2, 3)

        derived = order_from_two_selector(two_selector_from_order(order), born, split=('l0', 'r0'))

        assert derived == order

    def test_split_from_settings(self, settings):
        settings.BALLEAN_SPLIT_POINTS = ('l0', 'r0')
        window, order, born = ordinal_sum_window(2, 3)

        assert order_from_two_selector(two_selector_from_order(order), born).split == order.split

    def test_numeric_split_from_settings(self, settings, natural6, chain_bornology):
        settings.BALLEAN_SPLIT_POINTS = ('2', '3')

        derived = order_from_two_selector(two_selector_from_order(natural6), chain_bornology)

        assert derived.split == (2, 3)
        assert derived.sequence == (0, 1, 2, 3, 4, 5)

    def test_split_against_the_selector(self, natural6, chain_bornology):
        with pytest.raises(StructuralError) as error:
            derive_order(two_selector_from_order(natural6), chain_bornology, split=(3, 2))

        assert error.value.field == 'split'

    @pytest.mark.parametrize('sets, case', [
        ([[2, 3], [1, 2, 3, 4]], CASE_UNBOUNDED_SIDES),
        ([[0, 1, 2], [0, 1, 2, 3, 4]], CASE_BOUNDED_LEFT),
        ([[3, 4, 5], [1, 2, 3, 4, 5]], CASE_BOUNDED_RIGHT),
    ])
    def test_unbounded_window_cases(self, natural6, line6, sets, case):
        born = BornologyPresentation.from_sets(line6, sets)

        derivation = derive_order(two_selector_from_order(natural6), born)

        assert derivation.case == case
        assert derivation.order.sequence == (0, 1, 2, 3, 4, 5)
        assert not derivation.coverage['equal']

    def test_non_transitive_choices_get_anchored(self):
        window = Window.build(range(5))
        selector = _selector(window, {
            (0, 1): 0, (1, 2): 1, (0, 2): 2,
            (0, 3): 0, (1, 3): 1, (2, 3): 2,
            (0, 4): 0, (1, 4): 1, (2, 4): 2,
            (3, 4): 3,
        })
        born = BornologyPresentation.from_sets(window, [[0, 1, 2]])

        derivation = derive_order(selector, born)

        assert derivation.case == CASE_BOUNDED_LEFT
        assert derivation.left == (0,)
        assert derivation.right == (1, 3, 4)
        assert derivation.anchors == {2: 3}
        assert derivation.witnesses == {2: 0b00111}
        assert derivation.order.sequence == (0, 1, 3, 2, 4)
        assert derivation.order.split == (0, 1)

    def test_stalled_extension_is_inconclusive(self):
        window = Window.build(range(4))
        selector = _selector(window, {
            (0, 1): 0, (1, 2): 1, (0, 2): 2,
            (0, 3): 0, (1, 3): 3, (2, 3): 2,
        })
        born = BornologyPresentation.from_sets(window, [[0, 1, 2]])

        with pytest.raises(InconclusiveError):
            derive_order(selector, born, verify=False)

    def test_unverified_selector_must_cover_every_pair(self):
        window = Window.build(range(3))
        selector = _selector(window, {(0, 1): 0, (0, 2): 0})
        born = BornologyPresentation.from_sets(window, [[0, 1, 2]])

        with pytest.raises(StructuralError) as error:
            derive_order(selector, born, verify=False)

        assert error.value.field == 'choices'
        assert '[1, 2]' in str(error.value)

        with pytest.raises(StructuralError):
            star_constant(selector, 0b001, born, verify=False)

    def test_single_point_window(self):
        window = Window.build(['only'])
        born = BornologyPresentation.from_sets(window, [['only']])

        with pytest.raises(StructuralError):
            derive_order(SelectorMap(window, KIND_PAIRS, {}), born)

    def test_as_dict_lists_labels(self, natural6, chain_bornology):
        report = derive_order(two_selector_from_order(natural6), chain_bornology).as_dict()

        assert report['left'] == [0]
        assert report['right'] == [1, 2, 3, 4, 5]
        assert report['order'] == {'sequence': [0, 1, 2, 3, 4, 5], 'split': [0, 1]}


class TestRoundTrip:
    @pytest.mark.parametrize('size', [3, 4, 5])
    def test_every_small_order(self, size):
        for order in orders_on(size):
            assert _round_trip_equal(order)

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from([6, 7]).flatmap(lambda n: st.permutations(range(n))))
    def test_sampled_orders(self, sequence):
        order = LinearOrder(Window.build(range(len(sequence))), tuple(sequence))

        assert _round_trip_equal(order)
