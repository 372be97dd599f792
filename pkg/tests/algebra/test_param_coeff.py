"""
tests.algebra.test_param_coeff

================================================================================
Unit Tests for Laurent Parameter Coefficients
================================================================================

Overview
--------
Tests `src.algebra.param_coeff.ParamCoeff`, the Laurent polynomials in the
stabiliser parameters a, b, c, d, a', b', c', d'.

Tested Responsibilities
------------------------
- Name resolution and the invertible-parameter rule
- Arithmetic, Laurent inversion and negative powers
- Substitution and specialisation at rational values
- Normalisation helpers of the isolation summary
- Canonical rendering
"""

from fractions import Fraction

import pytest

from src.algebra.param_coeff import ParamCoeff, parameter_index
from src.exceptions.custom_exceptions import AlgebraError

a = ParamCoeff.parameter("a")
b = ParamCoeff.parameter("b")
c = ParamCoeff.parameter("c")
a_primed = ParamCoeff.parameter("a'")


def test_parameter_index():
    assert parameter_index("a") == 0
    assert parameter_index("d'") == 7
    assert parameter_index(3) == 3
    with pytest.raises(AlgebraError):
        parameter_index("z")


def test_only_a_b_and_primes_are_invertible():
    assert (a**-1 * a) == 1
    with pytest.raises(AlgebraError) as e:
        ParamCoeff.parameter("c", -1)
    assert e.value.details["parameter"] == "c"


def test_render_is_graded_lex():
    assert (a**6 - 1).render() == "a^6 - 1"
    assert (b - a**2).render() == "-a^2 + b"
    assert (a**5 - a_primed).render() == "a^5 - a'"
    assert ParamCoeff.zero().render() == "0"
    assert (Fraction(-1, 2) * c).render() == "-1/2*c"


def test_inverse_of_sum_raises():
    with pytest.raises(AlgebraError):
        (a + b).inverse()


def test_substitute_and_specialize():
    """
    Tests eliminating b = a^3 and evaluating the result.

    :return: None
    :rtype: None
    """
    p = a * b**-1 + c
    substituted = p.substitute("b", a**3)
    assert substituted == a**-2 + c
    assert substituted.specialize({"a": 2, "c": 1}) == Fraction(5, 4)


def test_specialize_errors():
    with pytest.raises(AlgebraError):
        (a + c).specialize({"a": 1})
    with pytest.raises(AlgebraError):
        (a**-1).specialize({"a": 0})


def test_clear_denominators_and_monic():
    assert (a**-1 * c).clear_denominators() == c
    assert (3 * a**-2 - 3).clear_denominators() == a**2 - 1
    assert (2 * a**6 - 2).monic() == a**6 - 1


def test_strip_units():
    assert (2 * a**-1 * c).strip_units() == c
    assert (a * b).strip_units() == 1
    with pytest.raises(AlgebraError):
        (a + c).strip_units()


def test_reduce_power_works_modulo_order():
    assert (a**7 + b).reduce_power("a", 6) == a + b
    assert (a**-1).reduce_power("a", 6) == a**5
    with pytest.raises(AlgebraError):
        c.reduce_power("c", 2)


def test_equality_with_scalars_and_hash():
    assert ParamCoeff.constant(3) == 3
    assert hash(a + b) == hash(b + a)
