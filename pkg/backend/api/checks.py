"""Named verification suites.

Each suite compares two independently computed sides weight by weight on
the window normSq <= radius and reports the first weight where they
differ. A suite never passes on a window narrower than requested: the
windowed series involved raise WindowTooNarrow instead.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from rest_framework import serializers

from api.serializers import (as_induced, group_model, load_document,
                             load_embedding)
from formal.branching import branch, branch_series
from formal.khom import (compact_group, dirac_pullback, dirac_restriction,
                         discrete_series_class, external_product_classes,
                         lift_series, module_action,
                         module_action_by_restriction)
from formal.series import act
from hamiltonian.partition import reduced_quantisation
from hamiltonian.quantise import (formal_quantisation_coefficient,
                                  induce_formal_quantisation,
                                  induce_quantisation, quantisation_series,
                                  reduction_multiplicity,
                                  semi_formal_quantisation,
                                  shifted_invariant_quantisation)
from hamiltonian.spaces import (InducedModel, LinearModel, TwistedModel,
                                external_product_model, restrict_model)

logger = logging.getLogger(__name__)

CHECKS = {}


@dataclass
class CheckReport:
    check: str
    radius: Fraction
    passed: bool
    window: list = field(default_factory=list)
    counterexample: Optional[tuple] = None


def register(name):
    def decorator(func):
        CHECKS[name] = func
        return func
    return decorator


def compare(check, radius, datum, *sides):
    window = datum.dominant_weights_up_to(radius)
    logger.debug('%s: comparing %d weights of %s up to %s',
                 check, len(window), datum.label, radius)
    counterexample = next(
        (weight for weight in window
         if len({side(weight) for side in sides}) > 1),
        None,
    )
    return CheckReport(check, Fraction(radius), counterexample is None,
                       list(window), counterexample)


def _linear(model, check):
    if not isinstance(model, LinearModel):
        raise serializers.ValidationError(
            f'{check} needs a linear model document.'
        )
    return model


def _restricted_group(document, group, embedding):
    return group_model(
        {'name': f'{group.name}|{embedding.source.label}',
         'd': document.get('restrictedD', 0)},
        embedding.source,
    )


@register('restr-cpt')
def restriction_check(document, radius):
    model = _linear(load_document(document), 'restr-cpt')
    embedding = load_embedding(document.get('embedding'), model.datum)
    restricted = branch_series(embedding, quantisation_series(model), radius)
    expected = quantisation_series(restrict_model(model, embedding))
    return compare('restr-cpt', radius, embedding.source,
                   restricted.coefficient, expected.coefficient)


@register('mult')
def multiplicativity_check(document, radius):
    first = as_induced(load_document(document.get('first')))
    second = as_induced(load_document(document.get('second')))
    product = induce_quantisation(external_product_model(first, second))
    factors = external_product_classes(
        induce_quantisation(first), induce_quantisation(second)
    )
    report = compare('mult', radius, product.model.compact,
                     product.series.coefficient, factors.series.coefficient)
    degree = first.group.d + second.group.d
    if not product.degree == factors.degree == degree:
        report.passed = False
    return report


@register('module')
def module_check(document, radius):
    """Q(G x_K O) . Q(G x_K N) four ways, against Q(G x_K (O x N))."""
    orbit, linear = load_document(dict(document, kind='module'))
    a, b = induce_quantisation(orbit), induce_quantisation(linear)
    product = induce_quantisation(InducedModel(
        b.model, TwistedModel(orbit.inner, linear.inner)
    ))
    direct = module_action(a, b)
    restricted = module_action_by_restriction(a, b, radius)
    compact = act(a.series.finite_element(), dirac_pullback(b))
    return compare('module', radius, b.model.compact,
                   product.series.coefficient, direct.series.coefficient,
                   restricted.series.coefficient, compact.coefficient)


@register('qr-induced')
def induced_check(document, radius):
    induced = as_induced(load_document(document))
    lifted = induce_quantisation(induced)
    reduced = induce_formal_quantisation(induced, radius)
    return compare('qr-induced', radius, induced.group.compact,
                   lifted.series.coefficient, reduced.series.coefficient)


@register('shift')
def shift_check(document, radius):
    model = _linear(load_document(document), 'shift')
    k_class = lift_series(
        compact_group(model.datum), quantisation_series(model)
    )
    semi = semi_formal_quantisation(model, radius)
    return compare(
        'shift', radius, model.datum,
        lambda weight: reduction_multiplicity(k_class, weight),
        lambda weight: shifted_invariant_quantisation(model, weight, radius),
        semi.coefficient,
    )


@register('dres-sign')
def discrete_series_check(document, radius):
    """DRes of a discrete series class is (-1)^{d/2} times branching."""
    group, weight = load_document(dict(document, kind='discrete-series'))
    sign, k_class = discrete_series_class(group, weight)
    embedding = load_embedding(document.get('embedding'), group.compact)
    restricted = dirac_restriction(
        k_class, _restricted_group(document, group, embedding),
        embedding, radius,
    )
    branched = branch(embedding, weight)
    report = compare('dres-sign', radius, embedding.source,
                     restricted.series.coefficient,
                     lambda mu: sign * branched[mu])
    if sign != (-1) ** (group.d // 2):
        report.passed = False
    return report


@register('dres-induced')
def induced_restriction_check(document, radius):
    """DRes Q(G x_K N) against Q(G' x_K' N) with N restricted to K'."""
    induced = as_induced(load_document(document))
    if not isinstance(induced.inner, LinearModel):
        raise serializers.ValidationError(
            'dres-induced needs a linear inner model.'
        )
    embedding = load_embedding(document.get('embedding'),
                               induced.group.compact)
    restricted_group = _restricted_group(document, induced.group, embedding)
    restricted = dirac_restriction(
        induce_quantisation(induced), restricted_group, embedding, radius
    )
    expected = induce_quantisation(InducedModel(
        restricted_group, restrict_model(induced.inner, embedding)
    ))
    return compare('dres-induced', radius, embedding.source,
                   restricted.series.coefficient,
                   expected.series.coefficient)


@register('oracle')
def oracle_check(document, radius):
    model = _linear(load_document(document), 'oracle')
    return compare(
        'oracle', radius, model.datum,
        lambda weight: formal_quantisation_coefficient(model, weight),
        lambda weight: reduced_quantisation(model, weight),
    )


def run_check(name, document, radius):
    return CHECKS[name](document, radius)
