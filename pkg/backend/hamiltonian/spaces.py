"""Combinatorial shadows of prequantised Hamiltonian spaces."""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from formal.branching import pullback_functional
from formal.khom import GroupModel
from lie.repring import weight_multiplicities
from quantisation.exceptions import (DatumMismatch, DegreeBoundMissing,
                                     DimensionMismatch, NotPointedCone,
                                     NotWeylInvariant, PropernessUncertified)

logger = logging.getLogger(__name__)

PLUS = '+'
MINUS = '-'


def _pairing(functional, weight):
    return sum((Fraction(x) * w for x, w in zip(functional, weight)),
               Fraction(0))


def _fractions(values, rank, what):
    if values is None:
        return None
    values = tuple(Fraction(v) for v in values)
    if len(values) != rank:
        raise DimensionMismatch(f'{what} needs {rank} entries, got {values}')
    return values


@dataclass(frozen=True)
class LinearModel:
    """V = C^n with the listed T-weights, as a Hamiltonian K-space.

    Properness is certified either by a half-space functional xi with
    <xi, alpha> > 0 on every weight, or asserted together with a linear
    degree functional delta: pi_lambda occurs in Sym^m V only for
    m <= floor(<delta, lambda>).
    """

    datum: object
    weights: tuple = ()
    half_space: Optional[tuple] = None
    degree_functional: Optional[tuple] = None
    proper: bool = False
    name: str = ''

    def __post_init__(self):
        weights = tuple(self.datum.weight(w) for w in self.weights)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'half_space', _fractions(
            self.half_space, self.datum.rank, 'half-space functional'))
        object.__setattr__(self, 'degree_functional', _fractions(
            self.degree_functional, self.datum.rank, 'degree functional'))
        if not self.datum.is_torus:
            counts = Counter(weights)
            for weight, count in counts.items():
                for index, _ in self.datum.simple_roots:
                    if counts[self.datum.reflect(weight, index)] != count:
                        raise NotWeylInvariant(
                            f'weights of {self.name or "model"} are not '
                            f'closed under the Weyl group of '
                            f'{self.datum.label}'
                        )
        if self.half_space is not None:
            if any(_pairing(self.half_space, w) <= 0 for w in weights):
                raise NotPointedCone(
                    f'{self.half_space} is not positive on every weight '
                    f'of {self.name or "model"}'
                )
            if self.degree_functional is not None:
                logger.warning(
                    'explicit degree bound of %s ignored: the half-space '
                    'functional certifies properness', self.name or 'model',
                )

    @property
    def is_certified(self):
        return self.half_space is not None or (
            self.proper and self.degree_functional is not None
        )

    def certify(self):
        if self.half_space is not None:
            return
        if not self.proper:
            raise PropernessUncertified(
                f'{self.name or "model"} over {self.datum.label} has neither '
                'a half-space functional nor asserted properness'
            )
        if self.degree_functional is None:
            raise DegreeBoundMissing(
                f'{self.name or "model"} asserts properness without a '
                'degree bound'
            )

    @property
    def effective_degree_functional(self):
        self.certify()
        if self.half_space is None:
            return self.degree_functional
        if not self.weights:
            return (Fraction(0),) * self.datum.rank
        lowest = min(_pairing(self.half_space, w) for w in self.weights)
        return tuple(x / lowest for x in self.half_space)

    def degree_bound(self, weight, twist=None):
        """Largest m with pi_weight possibly in Sym^m V, or -1 if none.

        With a twist mu the constituents of pi_mu x Sym^m V are bounded
        through pi_weight in pi_mu x pi_kappa, kappa = weight - nu.
        """
        functional = self.effective_degree_functional
        shifts = [self.datum.zero()] if twist is None else list(
            weight_multiplicities(self.datum, twist).terms)
        value = max(
            _pairing(functional, tuple(w - n for w, n in zip(weight, nu)))
            for nu in shifts
        )
        return max(math.floor(value), -1)


@dataclass(frozen=True)
class CoadjointOrbitModel:
    datum: object
    weight: tuple
    sign: str = PLUS

    def __post_init__(self):
        object.__setattr__(
            self, 'weight', self.datum.require_dominant(self.weight)
        )
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f'orbit sign must be + or -, got {self.sign!r}')

    @property
    def label(self):
        """Highest weight of the quantisation of the orbit."""
        if self.sign == PLUS:
            return self.weight
        return self.datum.dual_weight(self.weight)


@dataclass(frozen=True)
class TwistedModel:
    """O x V with the diagonal K-action."""

    orbit: CoadjointOrbitModel
    model: LinearModel

    def __post_init__(self):
        if self.orbit.datum != self.model.datum:
            raise DatumMismatch(
                f'orbit over {self.orbit.datum.label}, '
                f'model over {self.model.datum.label}'
            )

    @property
    def datum(self):
        return self.model.datum


@dataclass(frozen=True)
class InducedModel:
    """M = G x_K N."""

    group: GroupModel
    inner: Union[LinearModel, CoadjointOrbitModel, TwistedModel]

    def __post_init__(self):
        if self.inner.datum != self.group.compact:
            raise DatumMismatch(
                f'inner model over {self.inner.datum.label}, {self.group.name}'
                f' has maximal compact {self.group.compact.label}'
            )


def _pad(weight, before, after):
    return (0,) * before + tuple(weight) + (0,) * after


def product_model(first, second):
    datum = first.datum * second.datum
    weights = (
        tuple(_pad(w, 0, second.datum.rank) for w in first.weights)
        + tuple(_pad(w, first.datum.rank, 0) for w in second.weights)
    )
    name = f'{first.name or first.datum.label}x{second.name or second.datum.label}'
    if first.half_space is not None and second.half_space is not None:
        return LinearModel(datum, weights,
                           half_space=first.half_space + second.half_space,
                           name=name)
    if first.is_certified and second.is_certified:
        return LinearModel(
            datum, weights,
            degree_functional=(first.effective_degree_functional
                               + second.effective_degree_functional),
            proper=True, name=name,
        )
    return LinearModel(datum, weights, name=name)


def external_product_model(first, second):
    return InducedModel(first.group * second.group,
                        product_model(first.inner, second.inner))


def restrict_model(model, embedding):
    if embedding.target != model.datum:
        raise DatumMismatch(
            f'embedding into {embedding.target.label}, '
            f'model over {model.datum.label}'
        )
    weights = tuple(embedding.restrict_weight(w) for w in model.weights)
    half_space = None
    if model.half_space is not None:
        half_space = pullback_functional(embedding, model.half_space)
    return LinearModel(
        embedding.source, weights, half_space=half_space,
        name=f'Res({model.name or model.datum.label})',
    )
