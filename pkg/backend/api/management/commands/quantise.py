from api.cli import QuantisationCommand
from api.serializers import (TruncationSerializer, load_document,
                             model_representation)
from hamiltonian.quantise import induce_quantisation, quantisation_series
from hamiltonian.spaces import InducedModel


class Command(QuantisationCommand):
    help = 'Prints the formal quantisation of a model up to --radius.'
    command = 'quantise'

    def run(self, config, options):
        model = load_document(config.load_model_document())
        if isinstance(model, InducedModel):
            series = induce_quantisation(model).series
        else:
            series = quantisation_series(model)
        truncation = TruncationSerializer((series, config.radius)).data
        return {
            'model': model_representation(model),
            'radius': truncation['radius'],
            'series': truncation,
        }
