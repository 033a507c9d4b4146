"""Formal quantisation of Hamiltonian models, induction and shifting."""
import functools
import itertools
import logging
from collections import Counter
from fractions import Fraction

from formal.branching import standard_witness
from formal.khom import lift_series
from formal.series import FormalSeries, delta_series, windowed_series
from hamiltonian.partition import (orbit_reduced_quantisation,
                                   reduced_quantisation)
from hamiltonian.spaces import (MINUS, CoadjointOrbitModel, LinearModel,
                                TwistedModel)
from lie.repring import (Character, decompose_character, tensor_decompose,
                         weight_multiplicities)
from quantisation.exceptions import NoWitnessAvailable, WindowTooNarrow

logger = logging.getLogger(__name__)


def symmetric_algebra(model, degree, twist=None):
    """Decomposition of pi_twist x (Sym^0 V + ... + Sym^degree V)."""
    if twist is not None:
        twist = tuple(twist)
    return _symmetric_algebra(model, degree, twist)


@functools.lru_cache(maxsize=256)
def _symmetric_algebra(model, degree, twist):
    datum = model.datum
    terms = Counter()
    for m in range(degree + 1):
        for monomial in itertools.combinations_with_replacement(
                model.weights, m):
            terms[tuple(map(sum, zip(datum.zero(), *monomial)))] += 1
    character = Character(datum, terms)
    if twist is not None:
        character = character.convolve(weight_multiplicities(datum, twist))
    logger.debug(
        'Sym enumeration of %s up to degree %d: %d weights',
        model.name or datum.label, degree, len(character.terms),
    )
    return decompose_character(datum, character)


def formal_quantisation_coefficient(model, weight, twist=None):
    model.certify()
    weight = model.datum.require_dominant(weight)
    degree = model.degree_bound(weight, twist)
    if degree < 0:
        return 0
    return symmetric_algebra(model, degree, twist)[weight]


def _linear_witness(model, embedding):
    try:
        return standard_witness(
            'linear', embedding,
            weights=model.weights, half_space=model.half_space,
        )
    except NoWitnessAvailable as error:
        logger.debug('no witness: %s', error)
        return None


@functools.singledispatch
def quantisation_series(model):
    raise TypeError(f'Cannot quantise {type(model).__name__}')


@quantisation_series.register
def formal_quantisation_series(model: LinearModel):
    model.certify()
    return FormalSeries(
        model.datum,
        functools.partial(formal_quantisation_coefficient, model),
        witness=functools.partial(_linear_witness, model),
        label=f'Q({model.name or model.datum.label})',
        cone=(
            None if model.half_space is None
            else (model.weights, model.half_space)
        ),
    )


@quantisation_series.register
def coadjoint_quantisation_series(orbit: CoadjointOrbitModel):
    series = delta_series(orbit.datum, orbit.label)
    return FormalSeries(
        orbit.datum, series.oracle, support=series.support,
        label=f'Q(O{orbit.weight}{orbit.sign})',
    )


@quantisation_series.register
def twisted_quantisation_series(twisted: TwistedModel):
    twisted.model.certify()
    twist = twisted.orbit.label
    return FormalSeries(
        twisted.datum,
        functools.partial(formal_quantisation_coefficient, twisted.model,
                          twist=twist),
        label=f'Q(O{twisted.orbit.weight}{twisted.orbit.sign} x '
              f'{twisted.model.name or twisted.datum.label})',
    )


@functools.singledispatch
def reduced_space_quantisation(model, weight):
    raise TypeError(f'No reduction oracle for {type(model).__name__}')


@reduced_space_quantisation.register
def _(model: LinearModel, weight):
    return reduced_quantisation(model, weight)


@reduced_space_quantisation.register
def _(orbit: CoadjointOrbitModel, weight):
    return orbit_reduced_quantisation(orbit, weight)


@reduced_space_quantisation.register
def _(twisted: TwistedModel, weight):
    return reduced_quantisation(twisted.model, weight,
                                twist=twisted.orbit.label)


def induce_quantisation(induced):
    """Q_G(G x_K N) = ((DInd)^*)^{-1} Q_K(N)."""
    return lift_series(induced.group, quantisation_series(induced.inner))


def induce_formal_quantisation(induced, radius):
    """Sum of Q(M_lambda) [lambda]^* with Q(M_lambda) = Q(N_lambda)."""
    datum = induced.group.compact
    terms = {
        weight: reduced_space_quantisation(induced.inner, weight)
        for weight in datum.dominant_weights_up_to(radius)
    }
    return lift_series(induced.group, windowed_series(
        datum, terms, radius, label=f'Qformal({induced.group.name})',
    ))


def reduction_multiplicity(k_class, weight):
    return k_class.series.coefficient(weight)


def shifted_invariant_quantisation(model, weight, radius):
    """Q(M x O_lambda^-)^G as the invariant part of Q(M) x Q(O_lambda^-)."""
    model.certify()
    datum = model.datum
    weight = datum.require_dominant(weight)
    radius = Fraction(radius)
    if datum.norm_sq(weight) > radius:
        raise WindowTooNarrow(
            f'{weight} lies outside the radius {radius} window'
        )
    orbit = coadjoint_quantisation_series(
        CoadjointOrbitModel(datum, weight, MINUS)
    )
    trivial = datum.zero()
    total = 0
    for mu in datum.dominant_weights_up_to(radius):
        quantised = formal_quantisation_coefficient(model, mu)
        if not quantised:
            continue
        for nu in orbit.support:
            total += (quantised * orbit.coefficient(nu)
                      * tensor_decompose(datum, mu, nu)[trivial])
    return total


def semi_formal_quantisation(model, radius):
    datum = model.datum
    terms = {
        weight: shifted_invariant_quantisation(model, weight, radius)
        for weight in datum.dominant_weights_up_to(radius)
    }
    return windowed_series(
        datum, terms, radius,
        label=f'Qsemi({model.name or datum.label})',
    )
