"""
Report assembly and rendering.

JSON is the contract: keys sorted, fixed indentation, one trailing newline.
The text format flattens the same data into ``key: value`` lines for people.
"""
import json

from django.conf import settings

from search.solver import FOUND, INCONCLUSIVE, UNSAT

PASS = 'pass'
FAIL = 'fail'

EXIT_CODES = {
    PASS: 0,
    FOUND: 0,
    FAIL: 1,
    UNSAT: 1,
    INCONCLUSIVE: 2,
}
EXIT_STRUCTURAL = 3

FORMAT_JSON = 'json'
FORMAT_TEXT = 'text'
FORMAT_CHOICES = [FORMAT_JSON, FORMAT_TEXT]


def build_report(task: dict, outcome: str, payload: dict) -> dict:
    if outcome not in EXIT_CODES:
        raise ValueError(f'Unknown outcome {outcome!r}')
    report = dict(payload)
    report['task'] = {'name': task['name'], 'params': task.get('params') or {}}
    report['outcome'] = outcome
    return report


def exit_code(report: dict) -> int:
    return EXIT_CODES[report['outcome']]


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=settings.BALLEAN_REPORT_INDENT, ensure_ascii=False) + '\n'


def _flatten(value, prefix, lines):
    if isinstance(value, dict):
        if not value:
            lines.append(f'{prefix}: {{}}')
        for key in sorted(value):
            _flatten(value[key], f'{prefix}.{key}' if prefix else str(key), lines)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for index, item in enumerate(value):
            _flatten(item, f'{prefix}[{index}]', lines)
    else:
        lines.append(f'{prefix}: {json.dumps(value, sort_keys=True, ensure_ascii=False)}')


def render_text(report: dict) -> str:
    lines = []
    _flatten(report, '', lines)
    return '\n'.join(lines) + '\n'


def render(report: dict, fmt: str = None) -> str:
    fmt = fmt or settings.BALLEAN_REPORT_FORMAT
    if fmt == FORMAT_JSON:
        return render_json(report)
    if fmt == FORMAT_TEXT:
        return render_text(report)
    raise ValueError(f'Unknown report format {fmt!r}')
