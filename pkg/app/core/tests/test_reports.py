import pytest

from core.reports import (
    EXIT_CODES, FAIL, FORMAT_TEXT, PASS, build_report, exit_code, render,
)
from search.solver import FOUND, INCONCLUSIVE, UNSAT


class TestExitCodes:
    @pytest.mark.parametrize('outcome, code', [
        (PASS, 0), (FOUND, 0), (FAIL, 1), (UNSAT, 1), (INCONCLUSIVE, 2),
    ])
    def test_every_outcome_has_a_code(self, outcome, code):
        report = build_report({'name': 'validate'}, outcome, {})

        assert exit_code(report) == code

    def test_outcomes_are_exactly_the_task_results(self):
        assert set(EXIT_CODES) == {PASS, FAIL, FOUND, UNSAT, INCONCLUSIVE}

    def test_unknown_outcome_rejected(self):
        with pytest.raises(ValueError):
            build_report({'name': 'validate'}, 'maybe', {})


class TestRender:
    def test_text_flattens_nested_keys(self):
        report = build_report({'name': 'search'}, UNSAT, {'certificate': [{'step': 'assume'}]})

        assert render(report, FORMAT_TEXT) == (
            'certificate[0].step: "assume"\n'
            'outcome: "unsat"\n'
            'task.name: "search"\n'
            'task.params: {}\n'
        )

    def test_json_is_the_default(self, settings):
        settings.BALLEAN_REPORT_FORMAT = 'json'
        settings.BALLEAN_REPORT_INDENT = 2

        assert render(build_report({'name': 'validate'}, PASS, {})) == (
            '{\n  "outcome": "pass",\n  "task": {\n    "name": "validate",\n    "params": {}\n  }\n}\n'
        )
