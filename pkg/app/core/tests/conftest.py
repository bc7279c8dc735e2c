import json
from io import StringIO

import pytest
from django.core.management import call_command


@pytest.fixture
def scenario_file(tmp_path):
    """Write a scenario dict to a JSON file and return its path."""
    def write(data, name='scenario.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return path
    return write


@pytest.fixture
def run_command():
    """Run run_scenario; returns (exit code, stdout)."""
    def run(path, **options):
        out = StringIO()
        try:
            call_command('run_scenario', scenario=str(path), stdout=out, **options)
        except SystemExit as error:
            return error.code, out.getvalue()
        return 0, out.getvalue()
    return run


@pytest.fixture
def ordinal_sum_scenario():
    return {
        'version': 1,
        'window': {'kind': 'ordinal_sum', 'm': 2, 'k': 3},
        'task': {'name': 'derive-selector'},
    }


@pytest.fixture
def remark6_scenario():
    return {
        'version': 1,
        'window': {'kind': 'grid', 'n': 1},
        'task': {'name': 'search'},
    }


@pytest.fixture
def line_scenario():
    """The 1-D grid of radius 4 with its natural order."""
    return {
        'version': 1,
        'window': {'kind': 'grid', 'dims': 1, 'radius': 4},
        'coarse': {'kind': 'metric', 'radii': [1, 2]},
        'order': {'sequence': list(range(-4, 5))},
        'task': {'name': 'check-two-selector'},
    }
