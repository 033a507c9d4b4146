from django.core.management.base import CommandError

from api.checks import CHECKS, run_check
from api.cli import EXIT_FAILED_CHECK, EXIT_UNKNOWN_CHECK, QuantisationCommand
from api.serializers import CheckReportSerializer


class Command(QuantisationCommand):
    help = 'Runs a named verification suite on a model document.'
    command = 'verify'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--check', required=True,
                            help=f'One of: {", ".join(sorted(CHECKS))}.')

    def handle(self, *args, **options):
        if options['check'] not in CHECKS:
            raise CommandError(
                f'UnknownCheck: {options["check"]!r}; expected one of '
                f'{", ".join(sorted(CHECKS))}',
                returncode=EXIT_UNKNOWN_CHECK,
            )
        super().handle(*args, **options)

    def run(self, config, options):
        report = run_check(
            config.check_name, config.load_model_document(), config.radius
        )
        return CheckReportSerializer(report).data

    def after_emit(self, config, report):
        if not report['pass']:
            raise CommandError(
                f'CheckFailed: {report["check"]} differs at '
                f'{report["counterexample"]} within radius {report["radius"]}',
                returncode=EXIT_FAILED_CHECK,
            )
