import logging
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from coarse.exceptions import StructuralError
from core.reports import EXIT_STRUCTURAL, FORMAT_CHOICES, render
from core.runner import describe_validation_error, load_scenario, run_scenario

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Run a scenario file and write its report'

    def add_arguments(self, parser):
        parser.add_argument('--scenario', required=True, help='Path of the scenario JSON file')
        parser.add_argument('--output', help='Write the report here instead of stdout')
        parser.add_argument('--format', choices=FORMAT_CHOICES, help='Report format (default: settings)')
        parser.add_argument('--seed', type=int, help='Accepted for compatibility; runs are deterministic')
        parser.add_argument('--max-steps', type=int, help='Search budget in assumptions')

    def handle(self, *args, **options):
        if options['max_steps'] is not None and options['max_steps'] < 0:
            raise CommandError('--max-steps must be non-negative', returncode=EXIT_STRUCTURAL)
        if options['seed'] is not None:
            logger.debug('Ignoring --seed %d', options['seed'])

        try:
            raw = load_scenario(options['scenario'])
            report, code = run_scenario(raw, max_steps=options['max_steps'])
            text = render(report, options['format'])
        except serializers.ValidationError as error:
            raise CommandError(f'Invalid scenario: {describe_validation_error(error)}',
                               returncode=EXIT_STRUCTURAL) from None
        except StructuralError as error:
            raise CommandError(f'Invalid scenario: {error.field}: {error}', returncode=EXIT_STRUCTURAL) from None

        if options['output']:
            Path(options['output']).write_text(text, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f'Report written to {options["output"]}'))
        else:
            self.stdout.write(text, ending='')

        logger.info('Scenario %s: %s', options['scenario'], report['outcome'])
        if code:
            sys.exit(code)
