"""The group R^{-oo}(K) = Hom(R(K), Z) as coefficient oracles.

There is no unqualified equality on series: identities are checked on
truncation windows with `equal_up_to`.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from lie.repring import RKElement, tensor_decompose
from quantisation.exceptions import (DatumMismatch, NotFinitelySupported,
                                     WindowTooNarrow)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FormalSeries:
    datum: object
    oracle: Callable
    support: Optional[frozenset] = None
    window: Optional[Fraction] = None
    witness: Optional[Callable] = None
    label: str = ''
    # (weights, half_space) of a linear model whose cone holds the support
    cone: Optional[tuple] = None

    @property
    def is_finite(self):
        return self.support is not None and self.window is None

    def coefficient(self, weight):
        weight = self.datum.require_dominant(weight)
        if (self.window is not None
                and self.datum.norm_sq(weight) > self.window):
            raise WindowTooNarrow(
                f'{self.label or "series"} is only known up to radius '
                f'{self.window}, asked at {weight}'
            )
        if self.support is not None and weight not in self.support:
            return 0
        return int(self.oracle(weight))

    def finite_element(self):
        if not self.is_finite:
            raise NotFinitelySupported(
                f'{self.label or "series"} has no finite support'
            )
        return RKElement(
            self.datum, {w: self.coefficient(w) for w in self.support}
        )

    def max_support_norm_sq(self):
        return max((self.datum.norm_sq(w) for w in self.support),
                   default=Fraction(0))

    def truncate(self, radius):
        radius = Fraction(radius)
        if self.window is not None and radius > self.window:
            raise WindowTooNarrow(
                f'{self.label or "series"} is only known up to radius '
                f'{self.window}, truncation asked at {radius}'
            )
        return {
            weight: self.coefficient(weight)
            for weight in self.datum.dominant_weights_up_to(radius)
        }

    def first_difference(self, other, radius):
        _same_datum(self, other)
        first, second = self.truncate(radius), other.truncate(radius)
        return next(
            (weight for weight in first if first[weight] != second[weight]),
            None,
        )

    def equal_up_to(self, other, radius):
        return self.first_difference(other, radius) is None

    def pair(self, element):
        _same_datum(self, element)
        return sum(
            multiplicity * self.coefficient(weight)
            for weight, multiplicity in element.terms.items()
        )

    def witness_for(self, embedding):
        if self.is_finite:
            bound = self.max_support_norm_sq()
            return lambda radius: bound
        if self.window is not None or self.witness is None:
            return None
        return self.witness(embedding)

    def __add__(self, other):
        _same_datum(self, other)
        support = None
        if self.support is not None and other.support is not None:
            support = self.support | other.support

        def witness(embedding):
            first = self.witness_for(embedding)
            second = other.witness_for(embedding)
            if first is None or second is None:
                return None
            return lambda radius: max(first(radius), second(radius))

        return FormalSeries(
            self.datum,
            lambda w: self.coefficient(w) + other.coefficient(w),
            support=support,
            window=_narrowest(self.window, other.window),
            witness=witness,
            label=f'({self.label} + {other.label})',
        )

    def scale(self, factor):
        if factor == 0:
            return zero_series(self.datum)
        return FormalSeries(
            self.datum,
            lambda w: factor * self.coefficient(w),
            support=self.support,
            window=self.window,
            witness=self.witness,
            label=f'{factor}*{self.label}',
            cone=self.cone,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)


def _narrowest(*windows):
    known = [w for w in windows if w is not None]
    return min(known) if known else None


def _same_datum(first, second):
    if first.datum != second.datum:
        raise DatumMismatch(
            f'{first.datum.label} and {second.datum.label} differ'
        )


def series_from_terms(datum, terms, label=''):
    terms = {datum.require_dominant(w): int(m) for w, m in terms.items()}
    support = frozenset(w for w, m in terms.items() if m)
    return FormalSeries(
        datum, lambda w: terms.get(w, 0), support=support, label=label
    )


def windowed_series(datum, terms, radius, label=''):
    """A series known exactly for normSq <= radius and nowhere else."""
    series = series_from_terms(datum, terms, label)
    return FormalSeries(
        datum, series.oracle, support=series.support,
        window=Fraction(radius), label=label,
    )


def delta_series(datum, weight):
    weight = datum.require_dominant(weight)
    return series_from_terms(datum, {weight: 1}, label=f'delta{weight}')


def zero_series(datum):
    return series_from_terms(datum, {}, label='0')


def act(element, series):
    """R(K)-module action on R^{-oo}(K).

    Uses mult(nu; lambda x mu) = mult(mu; dual(lambda) x nu), so each
    coefficient is a finite sum over the constituents of dual(lambda) x nu.
    """
    _same_datum(element, series)
    datum = element.datum
    duals = [(datum.dual_weight(w), m) for w, m in element.terms.items()]

    def oracle(nu):
        total = 0
        for dual, multiplicity in duals:
            for mu, k in tensor_decompose(datum, dual, nu).terms.items():
                total += multiplicity * k * series.coefficient(mu)
        return total

    label = f'{sorted(element.terms)}.{series.label}'
    if series.is_finite:
        terms = Counter()
        for weight, multiplicity in element.terms.items():
            for mu in series.support:
                for nu, k in tensor_decompose(datum, weight, mu).terms.items():
                    terms[nu] += multiplicity * k * series.coefficient(mu)
        return series_from_terms(datum, terms, label)
    window = None
    if series.window is not None:
        window = (series.window - 2 * element.max_norm_sq()) / 2
    return FormalSeries(datum, oracle, window=window, label=label)
