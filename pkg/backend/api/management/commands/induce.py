from api.cli import QuantisationCommand
from api.serializers import ClassSerializer, as_induced, load_document
from hamiltonian.quantise import (induce_formal_quantisation,
                                  induce_quantisation)


class Command(QuantisationCommand):
    help = 'Prints the quantisation of an induced space G x_K N.'
    command = 'induce'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--formal', action='store_true',
            help='Assemble the class from reduced-space quantisations.',
        )

    def run(self, config, options):
        induced = as_induced(load_document(config.load_model_document()))
        if options.get('formal'):
            k_class = induce_formal_quantisation(induced, config.radius)
        else:
            k_class = induce_quantisation(induced)
        return ClassSerializer(
            k_class, context={'radius': config.radius}
        ).data
