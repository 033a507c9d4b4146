"""Root data of compact connected groups and their dominant chambers.

Weights are integer tuples in the fundamental-weight basis; torus
coordinates are plain character-lattice integers.
"""
import functools
import itertools
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import sympy

from quantisation.exceptions import DimensionMismatch, NotDominant, UnknownType

logger = logging.getLogger(__name__)

Weight = tuple[int, ...]

MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 4, 'T': 1}
MAX_RANK = {'A': 4, 'B': 3, 'C': 3, 'D': 4, 'T': 4}

TOKEN = re.compile(r'([ABCDT])(\d+)')
PRODUCT_SEPARATOR = re.compile(r'\s*x\s*')


@dataclass(frozen=True)
class Block:
    series: str
    rank: int

    @property
    def label(self):
        return f'{self.series}{self.rank}'

    @property
    def is_torus(self):
        return self.series == 'T'


def _cartan_block(series, rank):
    # Row i is the simple root alpha_i in fundamental-weight coordinates.
    cartan = [[0] * rank for _ in range(rank)]
    if series == 'T':
        return cartan
    for i in range(rank):
        cartan[i][i] = 2
    edges = [(i, i + 1) for i in range(rank - 1)]
    if series == 'D':
        edges = [(0, 1), (1, 2), (1, 3)]
    for i, j in edges:
        cartan[i][j] = cartan[j][i] = -1
    if series == 'B':
        cartan[rank - 2][rank - 1] = -2
    elif series == 'C':
        cartan[rank - 1][rank - 2] = -2
    return cartan


def _half_lengths(series, rank):
    # (alpha_i, alpha_i) / 2 with short roots of squared length 2.
    if series == 'B':
        return [2] * (rank - 1) + [1]
    if series == 'C':
        return [1] * (rank - 1) + [2]
    return [1] * rank


def _form_block(series, rank, cartan):
    if series == 'T':
        return [[Fraction(int(i == j)) for j in range(rank)]
                for i in range(rank)]
    inverse = sympy.Matrix(cartan).inv()
    lengths = _half_lengths(series, rank)
    return [[Fraction(str(lengths[i] * inverse[j, i])) for j in range(rank)]
            for i in range(rank)]


def _block_sum(matrices, zero):
    size = sum(len(m) for m in matrices)
    result = [[zero] * size for _ in range(size)]
    offset = 0
    for matrix in matrices:
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                result[offset + i][offset + j] = entry
        offset += len(matrix)
    return tuple(tuple(row) for row in result)


@dataclass(frozen=True)
class RootDatum:
    label: str
    blocks: tuple[Block, ...]
    cartan: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_blocks(cls, blocks):
        blocks = tuple(blocks)
        cartans = [_cartan_block(b.series, b.rank) for b in blocks]
        forms = [_form_block(b.series, b.rank, c)
                 for b, c in zip(blocks, cartans)]
        return cls(
            label='x'.join(b.label for b in blocks),
            blocks=blocks,
            cartan=_block_sum(cartans, 0),
            form=_block_sum(forms, Fraction(0)),
        )

    def __mul__(self, other):
        return RootDatum.from_blocks(self.blocks + other.blocks)

    def __str__(self):
        return self.label

    @property
    def rank(self):
        return len(self.cartan)

    @functools.cached_property
    def semisimple(self):
        return tuple(
            not block.is_torus
            for block in self.blocks for _ in range(block.rank)
        )

    @property
    def is_torus(self):
        return not any(self.semisimple)

    @functools.cached_property
    def simple_roots(self):
        return tuple(
            (i, self.cartan[i]) for i in range(self.rank) if self.semisimple[i]
        )

    @functools.cached_property
    def weyl_vector(self):
        return tuple(int(s) for s in self.semisimple)

    def weight(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise DimensionMismatch(
                f'{self.label} has rank {self.rank}, got weight {coords}'
            )
        return coords

    def zero(self):
        return (0,) * self.rank

    def is_dominant(self, weight):
        weight = self.weight(weight)
        return all(c >= 0 for c, ss in zip(weight, self.semisimple) if ss)

    def require_dominant(self, weight):
        weight = self.weight(weight)
        if not self.is_dominant(weight):
            raise NotDominant(f'{weight} is not dominant for {self.label}')
        return weight

    def inner_product(self, first, second):
        first, second = self.weight(first), self.weight(second)
        return sum(
            (self.form[i][j] * first[i] * second[j]
             for i in range(self.rank) for j in range(self.rank)
             if first[i] and second[j]),
            Fraction(0),
        )

    def norm_sq(self, weight):
        return self.inner_product(weight, weight)

    def reflect(self, weight, index):
        root = self.cartan[index]
        coefficient = weight[index]
        return tuple(w - coefficient * r for w, r in zip(weight, root))

    def coroot_pairing(self, weight, root):
        return int(2 * self.inner_product(weight, root)
                   / self.inner_product(root, root))

    def weyl_orbit(self, weight):
        return _weyl_orbit(self, self.weight(weight))

    def dominant_representative(self, weight):
        current = self.weight(weight)
        while True:
            index = next(
                (i for i, _ in self.simple_roots if current[i] < 0), None
            )
            if index is None:
                return current
            current = self.reflect(current, index)

    def straighten(self, weight):
        """Return (w', det(sigma)) with sigma(w + rho) = w' + rho dominant.

        The sign is 0 when w + rho lies on a wall of some chamber.
        """
        rho = self.weyl_vector
        current = tuple(w + r for w, r in zip(self.weight(weight), rho))
        sign = 1
        while True:
            index = next(
                (i for i, _ in self.simple_roots if current[i] < 0), None
            )
            if index is None:
                break
            current = self.reflect(current, index)
            sign = -sign
        shifted = tuple(c - r for c, r in zip(current, rho))
        if any(current[i] == 0 for i, _ in self.simple_roots):
            return shifted, 0
        return shifted, sign

    def dual_weight(self, weight):
        weight = self.require_dominant(weight)
        return self.dominant_representative(tuple(-c for c in weight))

    def dominant_weights_up_to(self, radius):
        return _dominant_weights_up_to(self, Fraction(radius))

    @functools.cached_property
    def positive_roots(self):
        return _positive_roots(self)

    @functools.cached_property
    def weyl_vector_orbit(self):
        """Pairs (w rho, det w) for every element w of the Weyl group."""
        rho = self.weyl_vector
        signed = {rho: 1}
        frontier = [rho]
        while frontier:
            following = []
            for image in frontier:
                for i, _ in self.simple_roots:
                    reflected = self.reflect(image, i)
                    if reflected not in signed:
                        signed[reflected] = -signed[image]
                        following.append(reflected)
            frontier = following
        return tuple(sorted(signed.items()))


@functools.lru_cache(maxsize=None)
def _weyl_orbit(datum, weight):
    orbit = {weight}
    frontier = [weight]
    while frontier:
        following = []
        for current in frontier:
            for i, _ in datum.simple_roots:
                reflected = datum.reflect(current, i)
                if reflected not in orbit:
                    orbit.add(reflected)
                    following.append(reflected)
        frontier = following
    return frozenset(orbit)


@functools.lru_cache(maxsize=None)
def _dominant_weights_up_to(datum, radius):
    if radius < 0:
        return ()
    ranges = []
    for i in range(datum.rank):
        bound = math.isqrt(math.floor(radius / datum.form[i][i]))
        low = 0 if datum.semisimple[i] else -bound
        ranges.append(range(low, bound + 1))
    found = [
        weight for weight in itertools.product(*ranges)
        if datum.norm_sq(weight) <= radius
    ]
    logger.debug(
        '%d dominant weights of %s within radius %s',
        len(found), datum.label, radius,
    )
    return tuple(sorted(found))


def _positive_roots(datum):
    simple = [root for _, root in datum.simple_roots]
    roots = set(simple)
    level = list(simple)
    while level:
        following = []
        for root in level:
            for i, alpha in datum.simple_roots:
                down = 0
                lowered = root
                while True:
                    lowered = tuple(r - a for r, a in zip(lowered, alpha))
                    if lowered not in roots:
                        break
                    down += 1
                if down - root[i] > 0:
                    raised = tuple(r + a for r, a in zip(root, alpha))
                    if raised not in roots:
                        roots.add(raised)
                        following.append(raised)
        level = following
    return tuple(sorted(roots))


def build_root_datum(label):
    tokens = PRODUCT_SEPARATOR.split(label.strip())
    blocks = []
    for token in tokens:
        match = TOKEN.fullmatch(token)
        if match is None:
            raise UnknownType(f'Unsupported root datum {label!r}')
        series, rank = match.group(1), int(match.group(2))
        if not MIN_RANK[series] <= rank <= MAX_RANK[series]:
            raise UnknownType(
                f'{series}{rank} is outside the supported ranks '
                f'{MIN_RANK[series]}..{MAX_RANK[series]}'
            )
        blocks.append(Block(series, rank))
    return RootDatum.from_blocks(blocks)
