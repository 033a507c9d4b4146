"""Generator-level K_d(C*_r G) and K^d(C*_r G).

Classes are labelled by dominant weights of the maximal compact subgroup:
[lambda] = DInd[pi_lambda] in K-theory and [lambda]^* in K-homology.
Kasparov products and the assembly map only appear through their action
on these labels.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from formal.branching import branch_series, diagonal, external_product
from formal.series import FormalSeries, delta_series, series_from_terms
from lie.repring import RKElement, tensor_decompose
from quantisation.exceptions import (DatumMismatch, NotFinitelySupported,
                                     NotStronglyElliptic, OddDimension)

logger = logging.getLogger(__name__)

ELLIPTIC_PREDICATES = {
    'all': lambda weight: True,
    'nonzero': lambda weight: any(weight),
    'none': lambda weight: False,
}


@dataclass(frozen=True)
class GroupModel:
    name: str
    compact: object
    d: int = 0
    strongly_elliptic: Optional[Callable] = field(
        default=None, compare=False, hash=False
    )

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f'd = dim G/K must be nonnegative, got {self.d}')

    def __mul__(self, other):
        split = self.compact.rank

        def predicate(weight):
            return (self.is_strongly_elliptic(weight[:split])
                    and other.is_strongly_elliptic(weight[split:]))

        return GroupModel(
            name=f'{self.name}x{other.name}',
            compact=self.compact * other.compact,
            d=self.d + other.d,
            strongly_elliptic=predicate,
        )

    def is_strongly_elliptic(self, weight):
        if self.strongly_elliptic is None:
            return self.d == 0
        return bool(self.strongly_elliptic(weight))


def compact_group(datum):
    return GroupModel(name=datum.label, compact=datum, d=0)


def _same_model(first, second):
    if first.model != second.model:
        raise DatumMismatch(
            f'{first.model.name} (d={first.model.d}) and '
            f'{second.model.name} (d={second.model.d}) differ'
        )


@dataclass(frozen=True)
class KTheoryClass:
    model: GroupModel
    element: RKElement

    def __add__(self, other):
        _same_model(self, other)
        return KTheoryClass(self.model, self.element + other.element)

    def __mul__(self, other):
        # R(K) = K_d(C*_r G) as rings through Dirac induction.
        _same_model(self, other)
        return KTheoryClass(self.model, self.element * other.element)


@dataclass(frozen=True, eq=False)
class KHomologyClass:
    model: GroupModel
    series: FormalSeries

    @property
    def degree(self):
        return self.model.d


def dirac_induction(model, element):
    if element.datum != model.compact:
        raise DatumMismatch(
            f'element over {element.datum.label}, '
            f'{model.name} has maximal compact {model.compact.label}'
        )
    return KTheoryClass(model, element)


def dual_class(k_class):
    """The inclusion K_d in K^d, [lambda] -> [lambda]^*."""
    return KHomologyClass(
        k_class.model,
        series_from_terms(k_class.model.compact, k_class.element.terms,
                          label=f'{k_class.element.items()}^*'),
    )


def dirac_pullback(k_class):
    return k_class.series


def lift_series(model, series):
    if series.datum != model.compact:
        raise DatumMismatch(
            f'series over {series.datum.label}, '
            f'{model.name} has maximal compact {model.compact.label}'
        )
    return KHomologyClass(model, series)


def external_product_classes(first, second):
    return KHomologyClass(
        first.model * second.model,
        external_product(first.series, second.series),
    )


def dirac_restriction(k_class, restricted_model, embedding, radius):
    """DRes^G_{G'}: conjugate Res^K_{K'} by the Dirac-induction pullbacks."""
    if embedding.target != k_class.model.compact:
        raise DatumMismatch(
            f'embedding into {embedding.target.label}, class over '
            f'{k_class.model.compact.label}'
        )
    if embedding.source != restricted_model.compact:
        raise DatumMismatch(
            f'embedding from {embedding.source.label}, {restricted_model.name}'
            f' has maximal compact {restricted_model.compact.label}'
        )
    restricted = branch_series(embedding, dirac_pullback(k_class), radius)
    return lift_series(restricted_model, restricted)


def _finite_element(a):
    if isinstance(a, KTheoryClass):
        return a.element
    if not a.series.is_finite:
        raise NotFinitelySupported(
            'module action needs a finitely supported first argument'
        )
    return a.series.finite_element()


def module_action(a, b):
    """a . b by direct convolution with tensor-product multiplicities."""
    _same_model(a, b)
    element = _finite_element(a)
    datum = b.model.compact
    largest = element.max_norm_sq()
    series = b.series

    if series.is_finite:
        terms = Counter()
        for first, m in element.terms.items():
            for second in series.support:
                coefficient = series.coefficient(second)
                for nu, k in tensor_decompose(datum, first, second).terms.items():
                    terms[nu] += m * coefficient * k
        return KHomologyClass(b.model, series_from_terms(
            datum, terms, label=f'{element.items()}.{series.label}'))

    def oracle(nu):
        total = 0
        bound = 2 * largest + 2 * datum.norm_sq(nu)
        for second in datum.dominant_weights_up_to(bound):
            coefficient = series.coefficient(second)
            if not coefficient:
                continue
            for first, m in element.terms.items():
                total += (m * coefficient
                          * tensor_decompose(datum, first, second)[nu])
        return total

    window = None
    if series.window is not None:
        window = (series.window - 2 * largest) / 2
    return KHomologyClass(b.model, FormalSeries(
        datum, oracle, window=window,
        label=f'{element.items()}.{series.label}',
    ))


def module_action_by_restriction(a, b, radius):
    """a . b := DRes^{GxG}_{Delta(G)}(a^* x b)."""
    _same_model(a, b)
    a_star = dual_class(a) if isinstance(a, KTheoryClass) else a
    product = external_product_classes(a_star, b)
    return dirac_restriction(
        product, b.model, diagonal(b.model.compact), radius
    )


def discrete_series_class(model, weight):
    """[pi^G_lambda]^* = (-1)^{d/2} [lambda]^* for strongly elliptic lambda."""
    weight = model.compact.require_dominant(weight)
    if model.d % 2:
        raise OddDimension(f'{model.name} has odd d = {model.d}')
    if not model.is_strongly_elliptic(weight):
        raise NotStronglyElliptic(
            f'{weight} is not strongly elliptic for {model.name}'
        )
    sign = -1 if (model.d // 2) % 2 else 1
    series = delta_series(model.compact, weight).scale(sign)
    return sign, KHomologyClass(model, series)
