"""Reduced-space quantisation through vector partition functions.

Independent of the Sym(V) enumeration in `quantise`: counts lattice
points by dynamic programming over a cone graded by a half-space
functional, then alternates over the Weyl group.
"""
import functools
import logging
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from lie.repring import weight_multiplicities
from quantisation.exceptions import NotPointedCone

logger = logging.getLogger(__name__)

LP_DENOMINATOR = 10 ** 6


def _dot(functional, vector):
    return sum((x * v for x, v in zip(functional, vector)), Fraction(0))


def find_half_space(columns, rank):
    """A rational xi with <xi, a> >= 1 on every column, if one exists."""
    if not columns:
        return (Fraction(0),) * rank
    result = linprog(
        c=np.zeros(rank),
        A_ub=-np.asarray(columns, dtype=float),
        b_ub=-np.ones(len(columns)),
        bounds=[(None, None)] * rank,
        method='highs',
    )
    if result.status != 0:
        raise NotPointedCone(f'columns {columns} span no pointed cone')
    functional = tuple(
        Fraction(float(x)).limit_denominator(LP_DENOMINATOR)
        for x in result.x
    )
    if any(_dot(functional, column) <= 0 for column in columns):
        raise NotPointedCone(
            f'rounded functional {functional} fails on {columns}'
        )
    return functional


def vector_partition(matrix, target, half_space=None):
    """#{m in N^n : A m = target} for A with columns in an open half-space."""
    matrix = [tuple(int(x) for x in row) for row in matrix]
    rank = len(matrix)
    columns = tuple(zip(*matrix)) if matrix else ()
    target = tuple(int(t) for t in target)
    if half_space is None:
        half_space = find_half_space(columns, rank)
    else:
        half_space = tuple(Fraction(x) for x in half_space)
        if any(_dot(half_space, column) <= 0 for column in columns):
            raise NotPointedCone(
                f'{half_space} is not positive on every column of {matrix}'
            )
    return _count(columns, half_space, 0, target)


@functools.lru_cache(maxsize=None)
def _count(columns, half_space, index, target):
    if index == len(columns):
        return int(not any(target))
    grade = _dot(half_space, target)
    if grade < 0:
        return 0
    column = columns[index]
    steps = math.floor(grade / _dot(half_space, column))
    total = 0
    remainder = target
    for _ in range(steps + 1):
        total += _count(columns, half_space, index + 1, remainder)
        remainder = tuple(r - c for r, c in zip(remainder, column))
    return total


def _twist_terms(datum, twist):
    if twist is None:
        return ((datum.zero(), 1),)
    return tuple(weight_multiplicities(datum, twist).terms.items())


def reduced_quantisation(model, weight, twist=None):
    """Q(N_lambda) for a linear model, optionally tensored with pi_twist.

    mult(pi_lambda, chi) = sum_w det(w) m_chi(lambda + rho - w rho), with
    the weight multiplicities m_chi of Sym(V) given by partition counts;
    without a half-space functional the count is graded by degree.
    """
    model.certify()
    datum = model.datum
    weight = datum.require_dominant(weight)
    rho = datum.weyl_vector
    shifts = [
        (tuple(w + r - s for w, r, s in zip(weight, rho, image)), sign)
        for image, sign in datum.weyl_vector_orbit
    ]
    twist_terms = _twist_terms(datum, twist)
    matrix = [list(row) for row in zip(*model.weights)] if model.weights \
        else [[] for _ in range(datum.rank)]

    if model.half_space is not None:
        total = 0
        for shifted, sign in shifts:
            for nu, multiplicity in twist_terms:
                target = tuple(s - n for s, n in zip(shifted, nu))
                total += sign * multiplicity * vector_partition(
                    matrix, target, model.half_space)
        return total

    graded = matrix + [[1] * len(model.weights)]
    grading = (Fraction(0),) * datum.rank + (Fraction(1),)
    top = model.degree_bound(weight, twist)
    total = 0
    for degree in range(top + 1):
        for shifted, sign in shifts:
            for nu, multiplicity in twist_terms:
                target = tuple(s - n for s, n in zip(shifted, nu)) + (degree,)
                total += sign * multiplicity * vector_partition(
                    graded, target, grading)
    return total


def orbit_reduced_quantisation(orbit, weight):
    """Q of the reduction of a coadjoint orbit at lambda: a point or empty."""
    datum = orbit.datum
    weight = datum.require_dominant(weight)
    base = orbit.weight if orbit.sign == '+' else tuple(-c for c in orbit.weight)
    return int(weight in datum.weyl_orbit(base))
