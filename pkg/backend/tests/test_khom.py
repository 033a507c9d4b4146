import pytest

from formal.branching import torus_inclusion
from formal.khom import (ELLIPTIC_PREDICATES, GroupModel, compact_group,
                         dirac_induction, dirac_pullback, dirac_restriction,
                         discrete_series_class, dual_class,
                         external_product_classes, lift_series,
                         module_action, module_action_by_restriction)
from formal.series import FormalSeries, act, delta_series
from lie.repring import RKElement
from quantisation.exceptions import (DatumMismatch, NotFinitelySupported,
                                     NotStronglyElliptic, OddDimension)


@pytest.fixture
def sl2(a1):
    return GroupModel('A1-d2', a1, d=2,
                      strongly_elliptic=ELLIPTIC_PREDICATES['nonzero'])


def test_strong_ellipticity(a1, sl2):
    assert compact_group(a1).is_strongly_elliptic((0,))
    assert not GroupModel('bare', a1, d=2).is_strongly_elliptic((3,))
    assert sl2.is_strongly_elliptic((3,))
    assert not sl2.is_strongly_elliptic((0,))
    with pytest.raises(ValueError):
        GroupModel('negative', a1, d=-2)


def test_group_products_add_degrees(a1, t1, sl2):
    product = sl2 * compact_group(t1)
    assert product.d == 2
    assert product.compact == a1 * t1
    assert product.is_strongly_elliptic((1, -4))
    assert not product.is_strongly_elliptic((0, 5))


def test_k_theory_is_the_representation_ring(a1, t1, sl2):
    one = dirac_induction(sl2, RKElement.irreducible(a1, (1,)))
    assert (one * one).element.terms == {(2,): 1, (0,): 1}
    assert (one + one).element.terms == {(1,): 2}
    with pytest.raises(DatumMismatch):
        dirac_induction(sl2, RKElement.unit(t1))
    with pytest.raises(DatumMismatch):
        one + dirac_induction(compact_group(a1), RKElement.unit(a1))


def test_dual_class_and_pullback(a1, sl2):
    k_class = dual_class(dirac_induction(sl2, RKElement(a1, {(2,): 3})))
    assert k_class.degree == 2
    assert dirac_pullback(k_class).finite_element().terms == {(2,): 3}


def test_module_action_on_generators(a1, sl2):
    one = dirac_induction(sl2, RKElement.irreducible(a1, (1,)))
    result = module_action(one, dual_class(one))
    assert result.series.finite_element().terms == {(2,): 1, (0,): 1}
    by_restriction = module_action_by_restriction(one, dual_class(one), 8)
    assert by_restriction.series.truncate(8) == {
        (0,): 1, (1,): 0, (2,): 1, (3,): 0, (4,): 0,
    }


@pytest.mark.parametrize('first', [(0,), (1,), (2,)])
@pytest.mark.parametrize('second', [(0,), (1,), (2,)])
def test_module_action_agrees_with_compact_side(a1, sl2, first, second):
    a = dual_class(dirac_induction(sl2, RKElement.irreducible(a1, first)))
    b = dual_class(dirac_induction(sl2, RKElement.irreducible(a1, second)))
    direct = module_action(a, b).series
    compact = act(a.series.finite_element(), dirac_pullback(b))
    restricted = module_action_by_restriction(a, b, 8).series
    assert direct.equal_up_to(compact, 8)
    assert direct.equal_up_to(restricted, 8)


def test_module_action_on_an_infinite_class(a1, sl2):
    ones = lift_series(sl2, FormalSeries(a1, lambda weight: 1))
    one = dirac_induction(sl2, RKElement.irreducible(a1, (1,)))
    result = module_action(one, ones)
    assert [result.series.coefficient((k,)) for k in range(4)] == [1, 2, 2, 2]
    with pytest.raises(NotFinitelySupported):
        module_action(ones, ones)


def test_external_product_of_classes(a1, t1, sl2):
    first = lift_series(sl2, delta_series(a1, (1,)))
    second = lift_series(compact_group(t1), delta_series(t1, (-2,)))
    product = external_product_classes(first, second)
    assert product.degree == 2
    assert product.series.coefficient((1, -2)) == 1


@pytest.mark.parametrize('d, sign', [(0, 1), (2, -1), (4, 1), (6, -1)])
def test_discrete_series_sign(a1, d, sign):
    model = GroupModel('G', a1, d=d, strongly_elliptic=ELLIPTIC_PREDICATES['all'])
    found, k_class = discrete_series_class(model, (3,))
    assert found == sign
    assert k_class.series.coefficient((3,)) == sign


def test_discrete_series_preconditions(a1, sl2):
    with pytest.raises(OddDimension):
        discrete_series_class(GroupModel('odd', a1, d=3), (1,))
    with pytest.raises(NotStronglyElliptic):
        discrete_series_class(sl2, (0,))


def test_dirac_restriction_of_discrete_series(a1, t1, sl2):
    _, k_class = discrete_series_class(sl2, (3,))
    torus_model = GroupModel('T1-compact', t1)
    restricted = dirac_restriction(
        k_class, torus_model, torus_inclusion(a1), 10
    )
    assert restricted.model == torus_model
    assert restricted.series.truncate(9) == {
        (-3,): -1, (-2,): 0, (-1,): -1, (0,): 0,
        (1,): -1, (2,): 0, (3,): -1,
    }
    with pytest.raises(DatumMismatch):
        dirac_restriction(k_class, compact_group(a1), torus_inclusion(a1), 10)


def test_external_products_of_generators_are_dual_to_irreducibles(a1, t1,
                                                                  sl2):
    torus = compact_group(t1)
    first_window = a1.dominant_weights_up_to(4)
    second_window = t1.dominant_weights_up_to(4)
    for left in first_window:
        for right in second_window:
            product = external_product_classes(
                lift_series(sl2, delta_series(a1, left)),
                lift_series(torus, delta_series(t1, right)),
            )
            for mu in first_window:
                for nu in second_window:
                    irreducible = RKElement.irreducible(a1 * t1, mu + nu)
                    assert product.series.pair(irreducible) == int(
                        (left, right) == (mu, nu)
                    )


@pytest.mark.parametrize('series', ['finite', 'infinite'])
def test_module_action_is_a_unital_ring_action(a1, sl2, series):
    if series == 'finite':
        b = lift_series(sl2, delta_series(a1, (2,)))
    else:
        b = lift_series(sl2, FormalSeries(a1, lambda weight: 1))
    x = dirac_induction(sl2, RKElement(a1, {(1,): 1, (0,): -2}))
    y = dirac_induction(sl2, RKElement.irreducible(a1, (2,)))
    unit = dirac_induction(sl2, RKElement.unit(a1))
    assert module_action(x * y, b).series.equal_up_to(
        module_action(x, module_action(y, b)).series, 6
    )
    assert module_action(unit, b).series.equal_up_to(b.series, 6)
