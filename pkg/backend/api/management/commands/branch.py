from rest_framework.exceptions import ValidationError

from api.cli import QuantisationCommand, parse_weight
from api.serializers import (EmbeddingSerializer, load_document,
                             terms_representation)
from formal.branching import Embedding, branch


class Command(QuantisationCommand):
    help = 'Restricts an irreducible representation along an embedding.'
    command = 'branch'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--weight', required=True,
                            help='Highest weight, e.g. "1,0".')

    def run(self, config, options):
        embedding = load_document(config.load_model_document())
        if not isinstance(embedding, Embedding):
            raise ValidationError('branch needs an embedding document.')
        weight = parse_weight(options['weight'])
        return {
            'embedding': EmbeddingSerializer(embedding).data,
            'weight': list(weight),
            'terms': terms_representation(branch(embedding, weight).terms),
        }
