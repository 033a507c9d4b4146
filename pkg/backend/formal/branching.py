"""Restriction Res^K_{K'} on R(K) and on witnessed formal series."""
import functools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from formal.series import FormalSeries, windowed_series
from lie.repring import Character, RKElement, decompose_character
from lie.repring import weight_multiplicities
from lie.rootdata import Block, RootDatum
from quantisation.exceptions import (DatumMismatch, LatticeMismatch,
                                     MissingWitness, NotWeylInvariant,
                                     NoWitnessAvailable)

logger = logging.getLogger(__name__)

TORUS_INCLUSION = 'torusInclusion'
BLOCK_SUBGROUP = 'blockSubgroup'
DIAGONAL = 'diagonal'
FACTOR_INCLUSION = 'factorInclusion'
KINDS = (TORUS_INCLUSION, BLOCK_SUBGROUP, DIAGONAL, FACTOR_INCLUSION)


def _identity(rank):
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


@dataclass(frozen=True)
class Embedding:
    """K' < K as a matrix sending K-weights to K'-weights."""

    source: RootDatum
    target: RootDatum
    weight_map: tuple
    kind: str

    def __post_init__(self):
        matrix = tuple(tuple(int(x) for x in row) for row in self.weight_map)
        object.__setattr__(self, 'weight_map', matrix)
        if self.kind not in KINDS:
            raise LatticeMismatch(f'Unknown embedding kind {self.kind!r}')
        if (len(matrix) != self.source.rank
                or any(len(row) != self.target.rank for row in matrix)):
            raise LatticeMismatch(
                f'weight map must be {self.source.rank}x{self.target.rank}'
            )
        if self.kind == DIAGONAL:
            expected = tuple(row + row for row in _identity(self.source.rank))
            if (self.target != self.source * self.source
                    or matrix != expected):
                raise LatticeMismatch('diagonal embedding must be [I | I]')

    @property
    def is_identity(self):
        return (self.source == self.target
                and self.weight_map == _identity(self.target.rank))

    def restrict_weight(self, weight):
        weight = self.target.weight(weight)
        if not self.source.rank:
            return ()
        image = np.asarray(self.weight_map, dtype=np.int64) @ np.asarray(
            weight, dtype=np.int64)
        return tuple(int(x) for x in image)

    def restrict_character(self, character):
        terms = Counter()
        for weight, multiplicity in character.terms.items():
            terms[self.restrict_weight(weight)] += multiplicity
        return Character(self.source, terms)


def torus_inclusion(target, weight_map=None, source=None):
    """The maximal torus of `target` by default."""
    if source is None:
        rank = len(weight_map) if weight_map is not None else target.rank
        source = RootDatum.from_blocks([Block('T', rank)])
    if weight_map is None:
        weight_map = _identity(target.rank)
    return Embedding(source, target, weight_map, TORUS_INCLUSION)


def diagonal(datum):
    return Embedding(
        datum, datum * datum,
        tuple(row + row for row in _identity(datum.rank)), DIAGONAL,
    )


def factor_inclusion(first, second, index):
    factors = (first, second)
    rows = []
    for i in range(factors[index].rank):
        row = [0] * (first.rank + second.rank)
        row[i + (first.rank if index else 0)] = 1
        rows.append(tuple(row))
    return Embedding(factors[index], first * second, tuple(rows),
                     FACTOR_INCLUSION)


def block_subgroup(source, target, weight_map):
    return Embedding(source, target, weight_map, BLOCK_SUBGROUP)


def compose(outer, inner):
    """inner: K'' -> K', outer: K' -> K; returns K'' -> K."""
    if inner.target != outer.source:
        raise LatticeMismatch(
            f'cannot compose {inner.source.label}->{inner.target.label} '
            f'with {outer.source.label}->{outer.target.label}'
        )
    matrix = (np.asarray(inner.weight_map, dtype=np.int64).reshape(
                  inner.source.rank, inner.target.rank)
              @ np.asarray(outer.weight_map, dtype=np.int64).reshape(
                  outer.source.rank, outer.target.rank))
    kind = TORUS_INCLUSION if inner.source.is_torus else BLOCK_SUBGROUP
    return Embedding(inner.source, outer.target, matrix.tolist(), kind)


def branch(embedding, weight):
    return _branch(embedding, embedding.target.require_dominant(weight))


@functools.lru_cache(maxsize=None)
def _branch(embedding, weight):
    restricted = embedding.restrict_character(
        weight_multiplicities(embedding.target, weight)
    )
    try:
        return decompose_character(embedding.source, restricted)
    except NotWeylInvariant as error:
        raise LatticeMismatch(
            f'{embedding.source.label} is not a subgroup of '
            f'{embedding.target.label} through {embedding.weight_map}'
        ) from error


def branch_rk(embedding, element):
    if element.datum != embedding.target:
        raise DatumMismatch(
            f'element over {element.datum.label}, '
            f'embedding into {embedding.target.label}'
        )
    terms = Counter()
    for weight, multiplicity in element.terms.items():
        for mu, k in branch(embedding, weight).terms.items():
            terms[mu] += multiplicity * k
    return RKElement(embedding.source, terms)


def branch_series(embedding, series, radius):
    if series.datum != embedding.target:
        raise DatumMismatch(
            f'series over {series.datum.label}, '
            f'embedding into {embedding.target.label}'
        )
    radius = Fraction(radius)
    if series.is_finite:
        contributing = sorted(series.support)
    else:
        witness = series.witness_for(embedding)
        if witness is None:
            raise MissingWitness(
                f'{series.label or "series"} has no restriction witness for '
                f'{embedding.target.label} -> {embedding.source.label}'
            )
        bound = witness(radius)
        logger.debug('witness bound %s for radius %s', bound, radius)
        contributing = embedding.target.dominant_weights_up_to(bound)
    terms = Counter()
    for weight in contributing:
        coefficient = series.coefficient(weight)
        if not coefficient:
            continue
        for mu, k in branch(embedding, weight).terms.items():
            if embedding.source.norm_sq(mu) <= radius:
                terms[mu] += coefficient * k
    return windowed_series(
        embedding.source, terms, radius,
        label=f'Res({series.label})',
    )


def pullback_functional(embedding, functional):
    # xi' with M^T xi' = xi, free parameters set to zero.
    matrix = sympy.Matrix(embedding.weight_map).T
    try:
        solution, parameters = matrix.gauss_jordan_solve(
            sympy.Matrix([sympy.Rational(str(x)) for x in functional])
        )
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in parameters})
    return tuple(Fraction(str(x)) for x in solution)


def _half_space_witness(embedding, weights, half_space):
    if embedding.is_identity:
        return lambda radius: radius
    if not (embedding.target.is_torus and embedding.source.is_torus):
        raise NoWitnessAvailable(
            'half-space witnesses need torus source and target, got '
            f'{embedding.target.label} -> {embedding.source.label}'
        )
    if half_space is None:
        raise NoWitnessAvailable('model has no half-space functional')
    pulled = pullback_functional(embedding, half_space)
    if pulled is None:
        raise NoWitnessAvailable(
            f'half-space functional {half_space} is not pulled back from '
            f'{embedding.source.label}'
        )
    if not weights:
        return lambda radius: Fraction(0)
    lowest = min(
        sum(x * a for x, a in zip(half_space, weight)) for weight in weights
    )
    longest = max(sum(a * a for a in weight) for weight in weights)
    scale = longest * sum(x * x for x in pulled) / (lowest * lowest)
    return lambda radius: scale * Fraction(radius)


def standard_witness(tag, embedding, **data):
    """Witness for a built-in generator model along `embedding`.

    finite:    support   -> largest normSq in the support
    coadjoint: weight    -> normSq of the orbit label
    linear:    weights, half_space -> cone bound from the functional
    """
    if tag == 'finite':
        bound = max((embedding.target.norm_sq(w) for w in data['support']),
                    default=Fraction(0))
        return lambda radius: bound
    if tag == 'coadjoint':
        bound = embedding.target.norm_sq(data['weight'])
        return lambda radius: bound
    if tag == 'linear':
        return _half_space_witness(
            embedding, data['weights'], data.get('half_space')
        )
    raise NoWitnessAvailable(f'No witness for model tag {tag!r}')


def external_product(first, second):
    """[lambda1]^* x [lambda2]^* = [(lambda1, lambda2)]^* on series."""
    datum = first.datum * second.datum
    split = first.datum.rank

    def oracle(weight):
        left = first.coefficient(weight[:split])
        return left and left * second.coefficient(weight[split:])

    support = None
    if first.support is not None and second.support is not None:
        support = frozenset(a + b for a in first.support
                            for b in second.support)
    windows = [w for w in (first.window, second.window) if w is not None]
    return FormalSeries(
        datum, oracle, support=support,
        window=min(windows) if windows else None,
        witness=functools.partial(_product_witness, first, second),
        label=f'{first.label} x {second.label}',
        cone=_product_cone(first, second),
    )


def _product_cone(first, second):
    if first.cone is None or second.cone is None:
        return None
    (weights1, half1), (weights2, half2) = first.cone, second.cone
    before, after = first.datum.rank, second.datum.rank
    weights = (
        tuple(tuple(w) + (0,) * after for w in weights1)
        + tuple((0,) * before + tuple(w) for w in weights2)
    )
    return weights, tuple(half1) + tuple(half2)


def _factor_embedding(source, target, rows):
    kind = TORUS_INCLUSION if source.is_torus else BLOCK_SUBGROUP
    return Embedding(source, target, rows, kind)


def split_embedding(embedding, first, second):
    """(e1, e2) with embedding = e1 x e2 over the factors, or None."""
    matrix = embedding.weight_map
    rank = first.rank
    blocks = embedding.source.blocks
    for cut in range(1, len(blocks)):
        size = sum(block.rank for block in blocks[:cut])
        head, tail = matrix[:size], matrix[size:]
        if (any(x for row in head for x in row[rank:])
                or any(x for row in tail for x in row[:rank])):
            continue
        return (
            _factor_embedding(RootDatum.from_blocks(blocks[:cut]), first,
                              tuple(row[:rank] for row in head)),
            _factor_embedding(RootDatum.from_blocks(blocks[cut:]), second,
                              tuple(row[rank:] for row in tail)),
        )
    return None


def _product_witness(first, second, embedding):
    if embedding.target != first.datum * second.datum:
        return None
    finite = [s for s in (first, second) if s.is_finite]
    if embedding.kind == DIAGONAL and finite:
        # mult(nu; l1 x l2) != 0 forces |l2| <= |l1| + |nu|.
        largest = finite[0].max_support_norm_sq()
        return lambda radius: 3 * largest + 2 * Fraction(radius)
    if embedding.kind == FACTOR_INCLUSION:
        for index, other in ((0, second), (1, first)):
            matches = factor_inclusion(first.datum, second.datum, index)
            if embedding == matches and other.is_finite:
                largest = other.max_support_norm_sq()
                return lambda radius: Fraction(radius) + largest
    factors = split_embedding(embedding, first.datum, second.datum)
    if factors is not None:
        bounds = (first.witness_for(factors[0]),
                  second.witness_for(factors[1]))
        if None not in bounds:
            # The form is block diagonal, so each factor sees at most |nu|.
            return lambda radius: bounds[0](radius) + bounds[1](radius)
    cone = _product_cone(first, second)
    if cone is not None:
        try:
            return standard_witness(
                'linear', embedding, weights=cone[0], half_space=cone[1]
            )
        except NoWitnessAvailable as error:
            logger.debug('no product witness: %s', error)
    return None
