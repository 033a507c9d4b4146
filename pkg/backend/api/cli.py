"""Shared plumbing of the management commands."""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from quantisation.exceptions import (DatumMismatch, DegreeBoundMissing,
                                     DimensionMismatch, LatticeMismatch,
                                     MissingWitness, NotDominant,
                                     NotPointedCone, NotStronglyElliptic,
                                     NotWeylInvariant, NoWitnessAvailable,
                                     OddDimension, PropernessUncertified,
                                     QuantisationError, UnknownType)

logger = logging.getLogger(__name__)

EXIT_FAILED_CHECK = 1
EXIT_PARSE_ERROR = 2
EXIT_UNCERTIFIED = 3
EXIT_UNKNOWN_CHECK = 4

PARSE_ERRORS = (
    ValidationError, json.JSONDecodeError, UnknownType, DimensionMismatch,
    NotDominant, NotWeylInvariant, NotPointedCone, DatumMismatch,
    LatticeMismatch, OddDimension, NotStronglyElliptic,
)
CERTIFICATE_ERRORS = (
    PropernessUncertified, DegreeBoundMissing, MissingWitness,
    NoWitnessAvailable,
)


def parse_radius(value):
    limit = Fraction(settings.QUANTISATION['MAX_RADIUS'])
    if value is None:
        value = settings.QUANTISATION['DEFAULT_RADIUS']
    try:
        radius = Fraction(str(value))
    except (ValueError, ZeroDivisionError) as error:
        raise CommandError(f'ValidationError: bad radius {value!r}',
                           returncode=EXIT_PARSE_ERROR) from error
    if not 0 <= radius <= limit:
        raise CommandError(
            f'ValidationError: radius must lie in [0, {limit}], got {radius}',
            returncode=EXIT_PARSE_ERROR,
        )
    return radius


def parse_weight(value):
    try:
        return tuple(int(c) for c in value.split(',') if c.strip())
    except ValueError as error:
        raise CommandError(f'ValidationError: bad weight {value!r}',
                           returncode=EXIT_PARSE_ERROR) from error


def resolve_model_path(value):
    path = Path(value)
    if path.is_file():
        return path
    builtin = Path(settings.QUANTISATION['MODELS_DIR']) / f'{value}.json'
    if builtin.is_file():
        return builtin
    raise CommandError(f'ValidationError: no model document {value!r}',
                       returncode=EXIT_PARSE_ERROR)


@dataclass(frozen=True)
class RunConfig:
    command: str
    model_file: Optional[Path]
    radius: Fraction
    output: Optional[Path] = None
    check_name: Optional[str] = None

    @classmethod
    def from_options(cls, command, options):
        model = options.get('model')
        out = options.get('out')
        return cls(
            command=command,
            model_file=resolve_model_path(model) if model else None,
            radius=parse_radius(options.get('radius')),
            output=Path(out) if out else None,
            check_name=options.get('check'),
        )

    def load_model_document(self):
        if self.model_file is None:
            raise CommandError('ValidationError: --model is required',
                               returncode=EXIT_PARSE_ERROR)
        with open(self.model_file, encoding='utf-8') as file:
            return json.load(file)


def exit_code(error):
    if isinstance(error, PARSE_ERRORS):
        return EXIT_PARSE_ERROR
    if isinstance(error, CERTIFICATE_ERRORS):
        return EXIT_UNCERTIFIED
    return EXIT_FAILED_CHECK


class QuantisationCommand(BaseCommand):
    command = None
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--model', help='Model document or built-in name.')
        parser.add_argument('--radius', help='Truncation radius (rational).')
        parser.add_argument('--out', help='Write the report to this file.')

    def handle(self, *args, **options):
        config = RunConfig.from_options(self.command, options)
        logger.debug('running %s', config)
        try:
            report = self.run(config, options)
        except (QuantisationError, ValidationError,
                json.JSONDecodeError) as error:
            raise CommandError(f'{type(error).__name__}: {error}',
                               returncode=exit_code(error)) from error
        self.emit(config, report)
        self.after_emit(config, report)

    def run(self, config, options):
        raise NotImplementedError

    def after_emit(self, config, report):
        pass

    def emit(self, config, report):
        text = json.dumps(report, sort_keys=True, indent=2)
        if config.output is None:
            self.stdout.write(text)
            return
        config.output.write_text(text + '\n', encoding='utf-8')
