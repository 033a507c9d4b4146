import random
from fractions import Fraction

import pytest

from lie.rootdata import build_root_datum
from quantisation.exceptions import (DimensionMismatch, NotDominant,
                                     UnknownType)

LABELS = ['A1', 'A2', 'A3', 'A4', 'B2', 'B3', 'C3', 'D4', 'A1xT1', 'T2']


@pytest.mark.parametrize('label, cartan', [
    ('A1', ((2,),)),
    ('A2', ((2, -1), (-1, 2))),
    ('B2', ((2, -2), (-1, 2))),
    ('C2', ((2, -1), (-2, 2))),
    ('T2', ((0, 0), (0, 0))),
])
def test_cartan_rows_are_simple_roots(label, cartan):
    assert build_root_datum(label).cartan == cartan


@pytest.mark.parametrize('label, form', [
    ('A1', ((Fraction(1, 2),),)),
    ('A2', ((Fraction(2, 3), Fraction(1, 3)),
            (Fraction(1, 3), Fraction(2, 3)))),
    ('B2', ((2, 1), (1, 1))),
    ('T2', ((1, 0), (0, 1))),
])
def test_form_on_fundamental_weights(label, form):
    assert build_root_datum(label).form == form


@pytest.mark.parametrize('label', ['A5', 'B1', 'C4', 'D3', 'E6', 'T5', 'A1y'])
def test_unsupported_types(label):
    with pytest.raises(UnknownType):
        build_root_datum(label)


def test_product_concatenates_blocks(a1, t1):
    datum = build_root_datum('A1 x T1')
    assert datum == a1 * t1
    assert datum.label == 'A1xT1'
    assert datum.rank == 2
    assert datum.semisimple == (True, False)
    assert datum.weyl_vector == (1, 0)
    assert datum.is_dominant((0, -3))
    assert not datum.is_dominant((-1, 0))


def test_weight_checks(a1, a2):
    with pytest.raises(DimensionMismatch):
        a2.weight((1,))
    with pytest.raises(NotDominant):
        a1.require_dominant((-1,))


def test_norm_of_a1_weights(a1):
    assert [a1.norm_sq((k,)) for k in range(4)] == [
        0, Fraction(1, 2), 2, Fraction(9, 2)
    ]


def test_dominant_window(a1, t1, a2):
    assert a1.dominant_weights_up_to(8) == ((0,), (1,), (2,), (3,), (4,))
    assert t1.dominant_weights_up_to(4) == (
        (-2,), (-1,), (0,), (1,), (2,)
    )
    assert a2.dominant_weights_up_to(2) == (
        (0, 0), (0, 1), (1, 0), (1, 1)
    )
    assert a1.dominant_weights_up_to(-1) == ()


def test_weyl_orbit_and_dual(a2, a1):
    assert a2.weyl_orbit((1, 0)) == {(1, 0), (-1, 1), (0, -1)}
    assert a2.dual_weight((1, 0)) == (0, 1)
    assert a2.dual_weight((2, 1)) == (1, 2)
    assert a1.dual_weight((5,)) == (5,)


def test_straighten(a1):
    assert a1.straighten((-1,)) == ((-1,), 0)
    assert a1.straighten((-3,)) == ((1,), -1)
    assert a1.straighten((2,)) == ((2,), 1)


@pytest.mark.parametrize('label, positive, order', [
    ('A1', 1, 2),
    ('A2', 3, 6),
    ('B2', 4, 8),
    ('C3', 9, 48),
    ('A4', 10, 120),
    ('D4', 12, 192),
    ('A1xA1', 2, 4),
    ('T3', 0, 1),
])
def test_root_counts_and_weyl_group_order(label, positive, order):
    datum = build_root_datum(label)
    assert len(datum.positive_roots) == positive
    assert len(datum.weyl_vector_orbit) == order
    assert sum(sign for _, sign in datum.weyl_vector_orbit) == (
        1 if order == 1 else 0
    )


def _sample_weight(datum, generator, dominant=True):
    return tuple(
        generator.randint(0 if dominant and semisimple else -3, 3)
        for semisimple in datum.semisimple
    )


@pytest.mark.parametrize('label', LABELS)
def test_each_weyl_orbit_has_one_dominant_weight(label):
    datum = build_root_datum(label)
    for weight in datum.dominant_weights_up_to(4):
        orbit = datum.weyl_orbit(weight)
        assert [w for w in orbit if datum.is_dominant(w)] == [weight]


@pytest.mark.parametrize('label', LABELS)
def test_dual_weight_is_an_involution(label):
    datum = build_root_datum(label)
    generator = random.Random(label)
    for _ in range(100):
        weight = _sample_weight(datum, generator)
        dual = datum.dual_weight(weight)
        assert datum.is_dominant(dual)
        assert datum.dual_weight(dual) == weight


@pytest.mark.parametrize('label', LABELS)
def test_form_is_weyl_invariant(label):
    datum = build_root_datum(label)
    generator = random.Random(label)
    for _ in range(20):
        first = _sample_weight(datum, generator, dominant=False)
        second = _sample_weight(datum, generator, dominant=False)
        for index, _ in datum.simple_roots:
            assert datum.inner_product(
                datum.reflect(first, index), datum.reflect(second, index)
            ) == datum.inner_product(first, second)
