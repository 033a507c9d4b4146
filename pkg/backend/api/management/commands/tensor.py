from api.cli import QuantisationCommand, parse_weight
from api.serializers import RootDatumSerializer, terms_representation
from lie.repring import RKElement, tensor_decompose
from lie.rootdata import build_root_datum


class Command(QuantisationCommand):
    help = 'Decomposes a tensor product of irreducible representations.'
    command = 'tensor'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--datum', required=True,
                            help='Root datum label, e.g. "A2" or "A1xT1".')
        parser.add_argument('--weight', action='append', required=True,
                            help='Highest weight of a factor; repeatable.')

    def run(self, config, options):
        datum = build_root_datum(options['datum'])
        weights = [parse_weight(w) for w in options['weight']]
        if len(weights) == 2:
            product = tensor_decompose(datum, *weights)
        else:
            product = RKElement.unit(datum)
            for weight in weights:
                product = product * RKElement.irreducible(datum, weight)
        return {
            'datum': RootDatumSerializer(datum).data,
            'factors': [list(w) for w in weights],
            'terms': terms_representation(product.terms),
        }
