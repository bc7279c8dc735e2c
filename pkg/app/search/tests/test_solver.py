import math

import pytest
from hypothesis import given, settings, strategies as st

from coarse.entourages import Entourage, union
from coarse.exceptions import SearchBudgetExceeded, StructuralError
from search.constraints import (
    ConstraintScenario, brute_force_two_selector, check_two_selector_against_scenario,
)
from search.generators import grid_remark6_scenario, ngon_scenario
from search.solver import FOUND, UNSAT, replay_certificate, search_two_selector

from .conftest import FIVE, scenarios


class TestConstraintScenario:
    def test_pairs_must_have_two_points(self, line3):
        with pytest.raises(StructuralError) as error:
            ConstraintScenario(line3, (0b111,), (frozenset({0}),), Entourage.diagonal(line3))

        assert error.value.field == 'pairs'

    def test_closeness_must_be_symmetric(self, line3):
        with pytest.raises(StructuralError) as error:
            ConstraintScenario(
                line3, (0b011, 0b110), (frozenset({0, 1}), frozenset({1})), Entourage.diagonal(line3),
            )

        assert error.value.field == 'closeness'

    def test_requirement_must_be_symmetric(self, line3):
        with pytest.raises(StructuralError) as error:
            ConstraintScenario.build(line3, [0b011], lambda a, b: False, Entourage.from_pairs(line3, [(0, 1)]))

        assert error.value.field == 'requirement'

    def test_build_sorts_pairs(self, line3):
        scenario = ConstraintScenario.build(line3, [0b110, 0b011], lambda a, b: False, Entourage.diagonal(line3))

        assert scenario.pairs == (0b011, 0b110)
        assert scenario.describe() == {'points': 3, 'pairs': 2, 'close_pairs': 0}


class TestSearchTwoSelector:
    def test_lonely_pair_takes_first_point(self, line3):
        scenario = ConstraintScenario.build(line3, [0b101], lambda a, b: False, Entourage.diagonal(line3))

        outcome = search_two_selector(scenario)

        assert outcome.kind == FOUND
        assert outcome.witness.choose([0, 2]) == 0

    def test_close_pairs_agree_on_shared_point(self, agreeing_pairs):
        outcome = search_two_selector(agreeing_pairs)

        assert outcome.kind == FOUND
        assert outcome.witness.choose([0, 1]) == 1
        assert outcome.witness.choose([1, 2]) == 1

    def test_found_witness_checks_out(self, agreeing_pairs):
        outcome = search_two_selector(agreeing_pairs)

        assert check_two_selector_against_scenario(agreeing_pairs, outcome.witness)['passed']

    def test_disjoint_close_pairs_are_unsat(self):
        scenario = ConstraintScenario.build(
            FIVE, [0b00011, 0b01100], lambda a, b: True, Entourage.diagonal(FIVE),
        )

        outcome = search_two_selector(scenario)

        assert outcome.kind == UNSAT
        assert outcome.certificate[-1]['step'] == 'conflict'
        assert replay_certificate(scenario, outcome.certificate)

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded) as error:
            search_two_selector(grid_remark6_scenario(2), max_steps=0)

        assert error.value.witness == {'max_steps': 0}

    def test_budget_from_settings(self, settings):
        settings.BALLEAN_SEARCH_MAX_STEPS = 0

        with pytest.raises(SearchBudgetExceeded):
            search_two_selector(grid_remark6_scenario(1))

    def test_as_dict(self, agreeing_pairs):
        report = search_two_selector(agreeing_pairs).as_dict()

        assert report['kind'] == 'found'
        assert report['witness'] == [
            {'subset': [0, 1], 'choice': 1},
            {'subset': [1, 2], 'choice': 1},
        ]
        assert report['certificate'] is None


class TestAntipodalGrid:
    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_unsat_with_replayable_certificate(self, n):
        scenario = grid_remark6_scenario(n)

        outcome = search_two_selector(scenario)

        assert outcome.kind == UNSAT
        assert replay_certificate(scenario, outcome.certificate)

    @pytest.mark.parametrize('n', [1, 2])
    def test_oracle_agrees(self, n):
        assert brute_force_two_selector(grid_remark6_scenario(n)) is None

    def test_certificate_is_stable(self):
        first = search_two_selector(grid_remark6_scenario(2)).certificate
        second = search_two_selector(grid_remark6_scenario(2)).certificate

        assert first == second

    def test_truncated_certificate_does_not_replay(self):
        scenario = grid_remark6_scenario(2)
        certificate = search_two_selector(scenario).certificate

        assert not replay_certificate(scenario, certificate[:-1])

    def test_unjustified_prune_does_not_replay(self):
        scenario = grid_remark6_scenario(1)
        certificate = search_two_selector(scenario).certificate
        prune = next(i for i, step in enumerate(certificate) if step['step'] == 'prune')
        forged = [dict(step) for step in certificate]
        forged[prune]['by_value'] = [p for p in forged[prune]['by_pair'] if p != forged[prune]['by_value']][0]

        assert not replay_certificate(scenario, forged)


class TestRegularPolygon:
    def test_octagon_tight_requirement_is_unsat(self):
        scenario = ngon_scenario(8, 2 * math.sin(math.pi / 8), 1.0)

        outcome = search_two_selector(scenario)

        assert outcome.kind == UNSAT
        assert replay_certificate(scenario, outcome.certificate)
        assert brute_force_two_selector(scenario) is None

    def test_octagon_diameter_requirement_is_found(self):
        scenario = ngon_scenario(8, 2 * math.sin(math.pi / 8), 2.0)

        outcome = search_two_selector(scenario)

        assert outcome.kind == FOUND
        assert outcome.witness.choices == brute_force_two_selector(scenario).choices
        assert sorted(outcome.witness.choices.values()) == [0, 1, 2, 3]

    def test_square_below_side_length_is_unsat(self):
        assert search_two_selector(ngon_scenario(4, math.sqrt(2), 1.0)).kind == UNSAT

    def test_square_at_diameter_is_found(self):
        assert search_two_selector(ngon_scenario(4, math.sqrt(2), 2)).kind == FOUND

    def test_odd_polygon(self):
        with pytest.raises(StructuralError) as error:
            ngon_scenario(5, 1, 1)

        assert error.value.field == 'n'


class TestOracleEquivalence:
    @settings(max_examples=150, deadline=None)
    @given(scenarios())
    def test_matches_brute_force(self, scenario):
        outcome = search_two_selector(scenario)
        oracle = brute_force_two_selector(scenario)

        if oracle is None:
            assert outcome.kind == UNSAT
            assert replay_certificate(scenario, outcome.certificate)
        else:
            assert outcome.kind == FOUND
            assert outcome.witness.choices == oracle.choices
            assert check_two_selector_against_scenario(scenario, outcome.witness)['passed']

    @settings(max_examples=100, deadline=None)
    @given(scenarios(), st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4))))
    def test_larger_requirement_keeps_solutions(self, scenario, extra):
        relaxed = ConstraintScenario(
            scenario.window,
            scenario.pairs,
            scenario.closeness,
            union(scenario.requirement, Entourage.from_pairs(
                scenario.window, extra | {(b, a) for a, b in extra},
            )),
        )

        if search_two_selector(scenario).kind == FOUND:
            assert search_two_selector(relaxed).kind == FOUND
