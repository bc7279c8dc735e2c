# write the bundled example scenarios

import json
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

VERSION = settings.BALLEAN_SCENARIO_VERSION

SCENARIOS = {
    'remark6.json': {
        'version': VERSION,
        'window': {'kind': 'grid', 'n': 2},
        'task': {'name': 'search', 'params': {'oracle': True}},
    },
    'ngon.json': {
        'version': VERSION,
        'window': {'kind': 'ngon', 'n': 8},
        'task': {'name': 'search', 'params': {'delta': '0.7653668647301796', 'epsilon': '1.0'}},
    },
    'ngon_relaxed.json': {
        'version': VERSION,
        'window': {'kind': 'ngon', 'n': 8},
        'task': {'name': 'search', 'params': {'delta': '0.7653668647301796', 'epsilon': '2.0'}},
    },
    'ordinal_sum.json': {
        'version': VERSION,
        'window': {'kind': 'ordinal_sum', 'm': 2, 'k': 3},
        'task': {'name': 'derive-selector'},
    },
    'chain.json': {
        'version': VERSION,
        'window': {'kind': 'explicit', 'points': ['a', 'b', 'c', 'd', 'e']},
        'bornology': {'kind': 'chain', 'sets': [['c'], ['b', 'c', 'd'], ['a', 'b', 'c', 'd', 'e']]},
        'task': {'name': 'derive-interval-base'},
    },
    'derive_order.json': {
        'version': VERSION,
        'window': {'kind': 'explicit', 'points': [0, 1, 2, 3, 4, 5]},
        'order': {'sequence': [2, 0, 4, 1, 5, 3]},
        'bornology': {'kind': 'interval'},
        'task': {'name': 'derive-order', 'params': {'selector': {'source': 'order'}}},
    },
    'grid_transfer.json': {
        'version': VERSION,
        'window': {'kind': 'grid', 'dims': 1, 'radius': 6},
        'coarse': {'kind': 'metric', 'radii': [1, 2]},
        'order': {'sequence': list(range(-6, 7))},
        'task': {'name': 'transfer-theorem5'},
    },
    'graph_validate.json': {
        'version': VERSION,
        'window': {'kind': 'graph', 'edges': [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]]},
        'coarse': {'kind': 'graph', 'scales': [1, 2, 3]},
        'task': {'name': 'validate'},
    },
}


class Command(BaseCommand):
    help = 'Write the bundled example scenarios'

    def add_arguments(self, parser):
        parser.add_argument('directory', help='Target directory, created if missing')

    def handle(self, *args, **options):
        directory = Path(options['directory'])
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as error:
            raise CommandError(f'Cannot create {directory}: {error.strerror}', returncode=3) from None
        for name, scenario in SCENARIOS.items():
            (directory / name).write_text(json.dumps(scenario, sort_keys=True, indent=2) + '\n', encoding='utf-8')
        self.stdout.write(self.style.SUCCESS(
            f'{len(SCENARIOS)} scenarios written to {directory}'))
