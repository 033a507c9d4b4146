from rest_framework.exceptions import ValidationError

from api.cli import QuantisationCommand
from api.serializers import (TruncationSerializer, load_document,
                             model_representation)
from hamiltonian.quantise import semi_formal_quantisation
from hamiltonian.spaces import LinearModel


class Command(QuantisationCommand):
    help = ('Prints the semi-formal quantisation: the invariant parts of '
            'Q(M x O_lambda^-) as lambda runs over the window.')
    command = 'shift'

    def run(self, config, options):
        model = load_document(config.load_model_document())
        if not isinstance(model, LinearModel):
            raise ValidationError('shift needs a linear model document.')
        truncation = TruncationSerializer(
            (semi_formal_quantisation(model, config.radius), config.radius)
        ).data
        return {
            'model': model_representation(model),
            'radius': truncation['radius'],
            'series': truncation,
        }
