"""
Scenario loading and task dispatch.

Schema problems surface as DRF ValidationError, malformed references as
StructuralError; both mean exit code 3 to the caller. Everything else ends in
a report whose outcome fixes the exit code.
"""
import json
import logging
from pathlib import Path
from typing import Optional, Tuple

from rest_framework import serializers

from coarse.exceptions import InconclusiveError, PreconditionError, StructuralError

from .reports import FAIL, INCONCLUSIVE, build_report, exit_code
from .scenarios import build_scenario
from .serializers import ScenarioSerializer
from .tasks import TASKS

logger = logging.getLogger(__name__)


def load_scenario(path) -> dict:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise StructuralError(f'Cannot read scenario file: {error.strerror}', field='scenario') from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise StructuralError(
            f'Scenario is not valid JSON (line {error.lineno}, column {error.colno})', field='scenario',
        ) from None
    if not isinstance(raw, dict):
        raise StructuralError('A scenario is a JSON object', field='scenario')
    return raw


def parse_scenario(raw: dict) -> dict:
    serializer = ScenarioSerializer(data=raw)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data


def first_error(detail, prefix: str = '') -> Tuple[str, str]:
    """The first offending field path and its message in a DRF error tree."""
    if isinstance(detail, dict):
        for key in sorted(detail, key=str):
            if detail[key]:
                name = prefix if key == 'non_field_errors' else (f'{prefix}.{key}' if prefix else str(key))
                return first_error(detail[key], name)
    elif isinstance(detail, list):
        for index, item in enumerate(detail):
            if isinstance(item, dict):
                if item:
                    return first_error(item, f'{prefix}[{index}]')
            elif isinstance(item, list):
                if item:
                    return first_error(item, prefix)
            else:
                return prefix or 'scenario', str(item)
    return prefix or 'scenario', str(detail)


def describe_validation_error(error: serializers.ValidationError) -> str:
    field, message = first_error(error.detail)
    return f'{field}: {message}'


def run_task(data: dict, max_steps: Optional[int] = None) -> dict:
    scenario = build_scenario(data)
    task = data['task']
    logger.info('Running task %s on %d points', task['name'], scenario.window.size)
    try:
        outcome, payload = TASKS[task['name']](scenario, {'max_steps': max_steps})
    except PreconditionError as error:
        outcome, payload = FAIL, {'error': str(error), 'check': error.report}
    except InconclusiveError as error:
        outcome, payload = INCONCLUSIVE, {'reason': error.reason, 'witness': error.witness}
    return build_report(_echo(task), outcome, payload)


def _echo(task: dict) -> dict:
    """The task section as plain JSON data."""
    return json.loads(json.dumps(task))


def run_scenario(raw: dict, max_steps: Optional[int] = None) -> Tuple[dict, int]:
    """Validate, run and report. Returns the report and its exit code."""
    report = run_task(parse_scenario(raw), max_steps=max_steps)
    return report, exit_code(report)
