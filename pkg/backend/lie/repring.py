"""Characters and the representation ring R(K).

Two independent tensor-product engines live here: the Klimyk rule
(`tensor_decompose`) and pointwise convolution of characters followed by
highest-weight stripping (`tensor_decompose_bruteforce`).
"""
import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from quantisation.exceptions import DatumMismatch, NotWeylInvariant

logger = logging.getLogger(__name__)


def _shift(weight, other, times=1):
    return tuple(w + times * o for w, o in zip(weight, other))


def _pruned(terms):
    return {w: m for w, m in terms.items() if m}


@dataclass(frozen=True)
class Character:
    datum: object
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'terms', _pruned(
            {self.datum.weight(w): int(m) for w, m in self.terms.items()}
        ))

    def __getitem__(self, weight):
        return self.terms.get(tuple(weight), 0)

    def __add__(self, other):
        _same_datum(self, other)
        return Character(self.datum, _sum_terms(self.terms, other.terms))

    def total(self):
        return sum(self.terms.values())

    def convolve(self, other):
        _same_datum(self, other)
        product = Counter()
        for first, m in self.terms.items():
            for second, n in other.terms.items():
                product[_shift(first, second)] += m * n
        return Character(self.datum, product)

    def is_weyl_invariant(self):
        for weight, multiplicity in self.terms.items():
            for index, _ in self.datum.simple_roots:
                if self[self.datum.reflect(weight, index)] != multiplicity:
                    return False
        return True


def _sum_terms(*mappings):
    total = Counter()
    for mapping in mappings:
        for key, value in mapping.items():
            total[key] += value
    return total


def _same_datum(first, second):
    if first.datum != second.datum:
        raise DatumMismatch(
            f'{first.datum.label} and {second.datum.label} differ'
        )


@dataclass(frozen=True)
class RKElement:
    """A virtual representation: dominant weight -> integer multiplicity."""

    datum: object
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'terms', _pruned(
            {self.datum.require_dominant(w): int(m)
             for w, m in self.terms.items()}
        ))

    @classmethod
    def irreducible(cls, datum, weight, multiplicity=1):
        return cls(datum, {datum.weight(weight): multiplicity})

    @classmethod
    def unit(cls, datum):
        return cls.irreducible(datum, datum.zero())

    def __getitem__(self, weight):
        return self.terms.get(tuple(weight), 0)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        _same_datum(self, other)
        return RKElement(self.datum, _sum_terms(self.terms, other.terms))

    def __neg__(self):
        return RKElement(self.datum, {w: -m for w, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return RKElement(
            self.datum, {w: scalar * m for w, m in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        _same_datum(self, other)
        product = Counter()
        for first, m in self.terms.items():
            for second, n in other.terms.items():
                for weight, k in tensor_decompose(
                        self.datum, first, second).terms.items():
                    product[weight] += m * n * k
        return RKElement(self.datum, product)

    def items(self):
        return sorted(self.terms.items())

    def dimension(self):
        return sum(m * dimension(self.datum, w) for w, m in self.terms.items())

    def max_norm_sq(self):
        return max((self.datum.norm_sq(w) for w in self.terms),
                   default=Fraction(0))


def _dominant_weights_of(datum, highest):
    found = {highest}
    frontier = [highest]
    while frontier:
        following = []
        for weight in frontier:
            for root in datum.positive_roots:
                steps = datum.coroot_pairing(weight, root)
                for k in range(1, steps + 1):
                    lowered = datum.dominant_representative(
                        _shift(weight, root, -k)
                    )
                    if lowered not in found:
                        found.add(lowered)
                        following.append(lowered)
        frontier = following
    return found


@functools.lru_cache(maxsize=None)
def _freudenthal(datum, highest):
    dominant = _dominant_weights_of(datum, highest)
    rho = datum.weyl_vector
    ordered = sorted(
        dominant,
        key=lambda mu: (-datum.inner_product(mu, rho), mu),
    )
    top = datum.norm_sq(_shift(highest, rho))
    multiplicities = {highest: 1}
    for mu in ordered:
        if mu == highest:
            continue
        total = Fraction(0)
        for root in datum.positive_roots:
            k = 1
            while True:
                raised = _shift(mu, root, k)
                representative = datum.dominant_representative(raised)
                if representative not in dominant:
                    break
                total += (multiplicities[representative]
                          * datum.inner_product(raised, root))
                k += 1
        gap = top - datum.norm_sq(_shift(mu, rho))
        multiplicities[mu] = int(2 * total / gap)
    logger.debug(
        'Freudenthal for %s on %s: %d dominant weights',
        highest, datum.label, len(multiplicities),
    )
    return multiplicities


def weight_multiplicities(datum, highest):
    return _weight_multiplicities(datum, datum.require_dominant(highest))


@functools.lru_cache(maxsize=None)
def _weight_multiplicities(datum, highest):
    terms = {}
    for mu, multiplicity in _freudenthal(datum, highest).items():
        for weight in datum.weyl_orbit(mu):
            terms[weight] = multiplicity
    return Character(datum, terms)


def dimension(datum, highest):
    return _dimension(datum, datum.require_dominant(highest))


@functools.lru_cache(maxsize=None)
def _dimension(datum, highest):
    rho = datum.weyl_vector
    shifted = _shift(highest, rho)
    result = Fraction(1)
    for root in datum.positive_roots:
        result *= (datum.inner_product(shifted, root)
                   / datum.inner_product(rho, root))
    return int(result)


def tensor_decompose(datum, first, second):
    """Klimyk rule: straighten lambda + nu over the weights nu of pi_mu."""
    return _tensor_decompose(
        datum, datum.require_dominant(first), datum.require_dominant(second)
    )


@functools.lru_cache(maxsize=None)
def _tensor_decompose(datum, first, second):
    if dimension(datum, second) > dimension(datum, first):
        first, second = second, first
    result = Counter()
    for nu, multiplicity in weight_multiplicities(
            datum, second).terms.items():
        target, sign = datum.straighten(_shift(first, nu))
        if sign:
            result[target] += sign * multiplicity
    return RKElement(datum, result)


def tensor_decompose_bruteforce(datum, first, second):
    product = weight_multiplicities(datum, first).convolve(
        weight_multiplicities(datum, second)
    )
    return decompose_character(datum, product)


def character_of(element):
    terms = Counter()
    for weight, multiplicity in element.terms.items():
        for mu, k in weight_multiplicities(
                element.datum, weight).terms.items():
            terms[mu] += multiplicity * k
    return Character(element.datum, terms)


def decompose_character(datum, character):
    if character.datum != datum:
        raise DatumMismatch(
            f'character over {character.datum.label}, expected {datum.label}'
        )
    if not character.is_weyl_invariant():
        raise NotWeylInvariant(
            f'character over {datum.label} is not Weyl invariant'
        )
    rho = datum.weyl_vector
    remaining = Counter(character.terms)
    result = {}
    while remaining:
        top = max(
            (w for w in remaining if datum.is_dominant(w)),
            key=lambda w: (datum.norm_sq(_shift(w, rho)), w),
        )
        multiplicity = remaining[top]
        result[top] = multiplicity
        for weight, k in weight_multiplicities(datum, top).terms.items():
            remaining[weight] -= multiplicity * k
            if not remaining[weight]:
                del remaining[weight]
    return RKElement(datum, result)


def dual_rk(element):
    datum = element.datum
    return RKElement(
        datum,
        {datum.dual_weight(w): m for w, m in element.terms.items()},
    )
