"""
tests.algebra.test_polymap

================================================================================
Unit Tests for Polynomial 4-Maps
================================================================================

Overview
--------
Tests `src.algebra.polymap`: the composition convention, linear maps and the
pull-back of the quadratic form q = x1*x4 - x2*x3.

Tested Responsibilities
------------------------
- `PolyMap4` construction rules and identity detection
- ``outer.compose(inner)`` is outer∘inner
- `quadratic_form_pullback`, `linear_map`, `combine`
- Evaluation and ring conversion
- Associativity of composition on seeded random maps of degree at most 3
"""

import random
from fractions import Fraction

import pytest

from src.algebra.polymap import PolyMap4, combine, linear_map, poly_compose, q_polynomial, quadratic_form_pullback
from src.algebra.polynomial import GroundPoly, ParamPoly
from src.exceptions.custom_exceptions import AlgebraError

x1, x2, x3, x4 = GroundPoly.variables()


def test_construction_rules():
    with pytest.raises(AlgebraError):
        PolyMap4([x1, x2, x3])
    with pytest.raises(AlgebraError):
        PolyMap4([x1, x2, x3, x4.to_param()])


def test_identity():
    identity = PolyMap4.identity()
    assert identity.is_identity()
    assert not PolyMap4([x2, x1, x3, x4]).is_identity()
    assert PolyMap4.identity(ParamPoly).ring is ParamPoly


def test_compose_is_outer_after_inner():
    """
    Tests that the inner map is substituted into the components of the outer one.

    :return: None
    :rtype: None
    """
    outer = PolyMap4([x1 + x2**2, x2, x3, x4])
    inner = PolyMap4([x1, x2 + 1, x3, x4])
    expected = PolyMap4([x1 + (x2 + 1) ** 2, x2 + 1, x3, x4])
    assert outer.compose(inner) == expected
    assert poly_compose(outer, inner) == expected
    assert inner.compose(outer) == PolyMap4([x1 + x2**2, x2 + 1, x3, x4])


def test_quadratic_form_pullback():
    assert quadratic_form_pullback(PolyMap4.identity()) == q_polynomial()
    swap = PolyMap4([x1, x3, x2, x4])
    assert quadratic_form_pullback(swap) == q_polynomial()
    scale = PolyMap4([2 * x1, x2, x3, x4])
    assert quadratic_form_pullback(scale) == 2 * x1 * x4 - x2 * x3


def test_linear_map_and_combine():
    m = linear_map([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
    assert m == PolyMap4([x4, x2, x3, x1])
    assert combine([[1, 1], [1, -1]], [x1, x2]) == (x1 + x2, x1 - x2)
    with pytest.raises(AlgebraError):
        combine([[1, 1, 1]], [x1, x2])


def test_evaluate_and_specialize():
    m = PolyMap4([x1 * x2, x2, Fraction(1, 2) * x3, x4 + 1])
    assert m.evaluate([2, 3, 4, 5]) == (6, 3, 2, 6)
    param = m.to_param()
    assert param.ring is ParamPoly
    with pytest.raises(AlgebraError):
        param.evaluate([1, 1, 1, 1])
    assert param.specialize({}) == m


def test_render():
    assert str(PolyMap4([x4, x2, x3, x1 - x2 * x4**2])) == "(x4, x2, x3, -x2*x4^2 + x1)"


def _random_map(rng: random.Random) -> PolyMap4:
    components = []
    for _ in range(4):
        terms = {}
        for _ in range(2):
            exps = [0, 0, 0, 0]
            for _ in range(rng.randint(0, 3)):
                exps[rng.randrange(4)] += 1
            terms[tuple(exps)] = Fraction(rng.choice((-2, -1, 1, 3)))
        components.append(GroundPoly(terms))
    return PolyMap4(components)


def test_compose_is_associative_on_random_maps():
    rng = random.Random(41)
    for _ in range(5):
        a, b, c = _random_map(rng), _random_map(rng), _random_map(rng)
        assert poly_compose(poly_compose(a, b), c) == poly_compose(a, poly_compose(b, c))
        assert poly_compose(a, PolyMap4.identity()) == a
        assert poly_compose(PolyMap4.identity(), a) == a
