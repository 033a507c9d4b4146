from fractions import Fraction

from rest_framework import serializers

from formal.branching import KINDS, Embedding
from formal.khom import ELLIPTIC_PREDICATES, GroupModel, compact_group
from hamiltonian.spaces import (MINUS, PLUS, CoadjointOrbitModel,
                                InducedModel, LinearModel, TwistedModel,
                                external_product_model, product_model)
from lie.rootdata import build_root_datum
from quantisation.exceptions import QuantisationError

LINEAR = 'linear'
COADJOINT = 'coadjoint'
TWISTED = 'twisted'
INDUCED = 'induced'
PRODUCT = 'product'
MODULE = 'module'
DISCRETE_SERIES = 'discrete-series'


def _build(factory, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except QuantisationError as error:
        raise serializers.ValidationError(
            f'{type(error).__name__}: {error}'
        ) from error


class RootDatumField(serializers.Field):
    default_error_messages = {
        'invalid': 'Root datum must be a label such as "A1xT1".',
    }

    def to_internal_value(self, data):
        if isinstance(data, dict):
            data = data.get('label')
        if not isinstance(data, str):
            self.fail('invalid')
        return _build(build_root_datum, data)

    def to_representation(self, value):
        return RootDatumSerializer(value).data


class FractionField(serializers.Field):
    """Rationals as integers, "p/q" strings or [p, q] pairs."""

    default_error_messages = {
        'invalid': 'Expected a rational number, got {value!r}.',
    }

    def to_internal_value(self, data):
        try:
            if isinstance(data, (list, tuple)):
                numerator, denominator = data
                return Fraction(int(numerator), int(denominator))
            if isinstance(data, float):
                self.fail('invalid', value=data)
            return Fraction(str(data))
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid', value=data)

    def to_representation(self, value):
        value = Fraction(value)
        return [value.numerator, value.denominator]


class RadiusField(FractionField):
    def to_representation(self, value):
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return str(value)


class WeightField(serializers.ListField):
    child = serializers.IntegerField()

    def to_representation(self, value):
        return [int(c) for c in value]


class RootDatumSerializer(serializers.Serializer):
    label = serializers.CharField()
    rank = serializers.IntegerField()
    cartan = serializers.ListField(child=WeightField())
    form = serializers.SerializerMethodField()

    def get_form(self, datum):
        field = FractionField()
        return [[field.to_representation(x) for x in row]
                for row in datum.form]


def terms_representation(terms):
    return [
        {'weight': list(weight), 'mult': int(multiplicity)}
        for weight, multiplicity in sorted(terms.items())
        if multiplicity
    ]


class TruncationSerializer(serializers.Serializer):
    radius = serializers.SerializerMethodField()
    terms = serializers.SerializerMethodField()

    def get_radius(self, instance):
        return RadiusField().to_representation(instance[1])

    def get_terms(self, instance):
        series, radius = instance
        return terms_representation(series.truncate(radius))


class GroupSummarySerializer(serializers.Serializer):
    name = serializers.CharField()
    compact = RootDatumField()
    d = serializers.IntegerField()


class ClassSerializer(serializers.Serializer):
    model = serializers.SerializerMethodField()
    series = serializers.SerializerMethodField()
    radius = serializers.SerializerMethodField()

    def get_model(self, k_class):
        return GroupSummarySerializer(k_class.model).data

    def get_series(self, k_class):
        return TruncationSerializer(
            (k_class.series, self.context['radius'])
        ).data

    def get_radius(self, k_class):
        return RadiusField().to_representation(self.context['radius'])


class EmbeddingSerializer(serializers.Serializer):
    source = RootDatumField()
    target = RootDatumField(required=False)
    map = serializers.ListField(child=WeightField(), allow_empty=True)
    kind = serializers.ChoiceField(choices=KINDS)

    def validate(self, attrs):
        if 'target' not in attrs:
            if 'target' not in self.context:
                raise serializers.ValidationError(
                    {'target': 'This field is required.'}
                )
            attrs['target'] = self.context['target']
        return attrs

    def create(self, validated_data):
        return _build(
            Embedding,
            source=validated_data['source'],
            target=validated_data['target'],
            weight_map=validated_data['map'],
            kind=validated_data['kind'],
        )

    def to_representation(self, embedding):
        return {
            'source': RootDatumSerializer(embedding.source).data,
            'target': RootDatumSerializer(embedding.target).data,
            'map': [list(row) for row in embedding.weight_map],
            'kind': embedding.kind,
        }


class LinearModelSerializer(serializers.Serializer):
    datum = RootDatumField()
    weights = serializers.ListField(child=WeightField(), default=list)
    xi = serializers.ListField(child=FractionField(), required=False)
    degreeBound = serializers.ListField(
        child=FractionField(), required=False
    )
    proper = serializers.BooleanField(default=False)
    name = serializers.CharField(default='', allow_blank=True)

    def create(self, validated_data):
        return _build(
            LinearModel,
            validated_data['datum'],
            tuple(tuple(w) for w in validated_data['weights']),
            half_space=validated_data.get('xi'),
            degree_functional=validated_data.get('degreeBound'),
            proper=validated_data['proper'],
            name=validated_data['name'],
        )


class CoadjointOrbitSerializer(serializers.Serializer):
    datum = RootDatumField()
    weight = WeightField()
    sign = serializers.ChoiceField(choices=(PLUS, MINUS), default=PLUS)

    def create(self, validated_data):
        return _build(
            CoadjointOrbitModel,
            validated_data['datum'],
            tuple(validated_data['weight']),
            validated_data['sign'],
        )


class DocumentField(serializers.Field):
    def __init__(self, kinds=None, **kwargs):
        self.kinds = kinds
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            raise serializers.ValidationError('Expected a model document.')
        data = dict(data)
        if self.kinds and len(self.kinds) == 1:
            data.setdefault('kind', self.kinds[0])
        if self.kinds and data.get('kind') not in self.kinds:
            raise serializers.ValidationError(
                f'Expected one of {list(self.kinds)}, '
                f'got {data.get("kind")!r}.'
            )
        return load_document(data)


class TwistedModelSerializer(serializers.Serializer):
    orbit = DocumentField(kinds=(COADJOINT,))
    model = DocumentField(kinds=(LINEAR,))

    def create(self, validated_data):
        return _build(
            TwistedModel, validated_data['orbit'], validated_data['model']
        )


class GroupModelSerializer(serializers.Serializer):
    name = serializers.CharField(default='', allow_blank=True)
    d = serializers.IntegerField(min_value=0, default=0)
    stronglyElliptic = serializers.ChoiceField(
        choices=tuple(ELLIPTIC_PREDICATES), required=False
    )

    def create(self, validated_data):
        compact = self.context['compact']
        predicate = validated_data.get('stronglyElliptic')
        return GroupModel(
            name=validated_data['name'] or compact.label,
            compact=compact,
            d=validated_data['d'],
            strongly_elliptic=(
                ELLIPTIC_PREDICATES[predicate] if predicate else None
            ),
        )


def group_model(data, compact):
    serializer = GroupModelSerializer(
        data=data, context={'compact': compact}
    )
    serializer.is_valid(raise_exception=True)
    return serializer.save()


class InducedModelSerializer(GroupModelSerializer):
    inner = DocumentField(kinds=(LINEAR, COADJOINT, TWISTED))

    def create(self, validated_data):
        inner = validated_data['inner']
        self.context['compact'] = inner.datum
        return _build(InducedModel, super().create(validated_data), inner)


class ProductSerializer(serializers.Serializer):
    first = DocumentField(kinds=(LINEAR, INDUCED))
    second = DocumentField(kinds=(LINEAR, INDUCED))

    def validate(self, attrs):
        if type(attrs['first']) is not type(attrs['second']):
            raise serializers.ValidationError(
                'Both factors must be linear or both induced.'
            )
        inners = [getattr(f, 'inner', f) for f in attrs.values()]
        if not all(isinstance(inner, LinearModel) for inner in inners):
            raise serializers.ValidationError(
                'Products are formed of linear models only.'
            )
        return attrs

    def create(self, validated_data):
        first, second = validated_data['first'], validated_data['second']
        if isinstance(first, InducedModel):
            return _build(external_product_model, first, second)
        return _build(product_model, first, second)


class ModuleSerializer(GroupModelSerializer):
    """The pair (G x_K O, G x_K N) whose classes are multiplied."""

    orbit = DocumentField(kinds=(COADJOINT,))
    inner = DocumentField(kinds=(LINEAR,))

    def validate(self, attrs):
        if attrs['orbit'].datum != attrs['inner'].datum:
            raise serializers.ValidationError(
                'Orbit and linear model must share a root datum.'
            )
        return attrs

    def create(self, validated_data):
        self.context['compact'] = validated_data['inner'].datum
        group = super().create(validated_data)
        return (
            _build(InducedModel, group, validated_data['orbit']),
            _build(InducedModel, group, validated_data['inner']),
        )


class DiscreteSeriesSerializer(GroupModelSerializer):
    datum = RootDatumField()
    weight = WeightField()

    def create(self, validated_data):
        self.context['compact'] = validated_data['datum']
        group = super().create(validated_data)
        return group, _build(
            group.compact.require_dominant, validated_data['weight']
        )


DOCUMENT_SERIALIZERS = {
    LINEAR: LinearModelSerializer,
    COADJOINT: CoadjointOrbitSerializer,
    TWISTED: TwistedModelSerializer,
    INDUCED: InducedModelSerializer,
    PRODUCT: ProductSerializer,
    MODULE: ModuleSerializer,
    DISCRETE_SERIES: DiscreteSeriesSerializer,
}
DOCUMENT_SERIALIZERS.update((kind, EmbeddingSerializer) for kind in KINDS)


def load_document(data, context=None):
    if not isinstance(data, dict):
        raise serializers.ValidationError('Expected a JSON object.')
    serializer_class = DOCUMENT_SERIALIZERS.get(data.get('kind'))
    if serializer_class is None:
        raise serializers.ValidationError(
            {'kind': f'Unknown document kind {data.get("kind")!r}.'}
        )
    serializer = serializer_class(data=data, context=context or {})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def load_embedding(data, target):
    if data is None:
        raise serializers.ValidationError(
            {'embedding': 'This field is required.'}
        )
    serializer = EmbeddingSerializer(data=data, context={'target': target})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def as_induced(model):
    if isinstance(model, InducedModel):
        return model
    return InducedModel(compact_group(model.datum), model)


class CheckReportSerializer(serializers.Serializer):
    check = serializers.CharField()
    radius = RadiusField()
    passed = serializers.BooleanField()
    witnessedWindow = serializers.ListField(
        source='window', child=WeightField()
    )
    counterexample = WeightField(allow_null=True)

    def to_representation(self, report):
        data = super().to_representation(report)
        data['pass'] = data.pop('passed')
        return data


def model_representation(model):
    if isinstance(model, InducedModel):
        return GroupSummarySerializer(model.group).data
    return {
        'name': getattr(model, 'name', '') or model.datum.label,
        'datum': RootDatumSerializer(model.datum).data,
    }
