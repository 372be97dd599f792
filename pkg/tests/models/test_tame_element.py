"""
tests.models.test_tame_element

================================================================================
Unit Tests for Tame Elements
================================================================================

Overview
--------
Tests `src.models.tame_element.TameElement`, a word in the generators with
its forward and inverse maps kept side by side.

Tested Responsibilities
------------------------
- A word [w1, ..., wn] is the composite w1∘...∘wn
- Products, inverses and powers keep both maps consistent
- Equality compares forward maps, not words
- Invariant checks catch a generator that breaks q
"""

from fractions import Fraction

import pytest

from src.algebra.polymap import PolyMap4
from src.algebra.polynomial import GroundPoly
from src.exceptions.custom_exceptions import AlgebraError
from src.models.generator import Generator
from src.models.tame_element import TameElement
from src.services.tame_group_service import elementary_x1_squared, swap_23

x1, x2, x3, x4 = GroundPoly.variables()


def test_identity():
    ident = TameElement.identity()
    assert ident.render_word() == "id"
    assert ident.forward.is_identity()
    ident.check_invariants()


def test_word_is_outer_first():
    """
    Tests that the first letter of the word is the outermost map.

    :return: None
    :rtype: None
    """
    e, tau = elementary_x1_squared(), swap_23()
    element = TameElement.from_word([(e, 1), (tau, 1)])
    assert element.forward == PolyMap4([x1, x3 + x1**3, x2, x4 + x2 * x1**2])
    assert element.render_word() == "e * tau"
    element.check_invariants()


def test_inverse_and_powers():
    e, tau = elementary_x1_squared(), swap_23()
    element = TameElement.from_word([(e, 1), (tau, 1)])
    assert (element * element.inverted()).forward.is_identity()
    assert element.inverted().render_word() == "tau^-1 * e^-1"
    assert element**0 == TameElement.identity()
    assert (element**2).forward == element.forward.compose(element.forward)
    assert element**-1 == element.inverted()


def test_equality_ignores_word():
    tau = TameElement.letter(swap_23())
    assert tau * tau == TameElement.identity()
    assert hash(tau * tau) == hash(TameElement.identity())
    assert (tau * tau).render_word() == "tau * tau"


def test_letter_sign_must_be_unit():
    with pytest.raises(AlgebraError) as e:
        TameElement.letter(swap_23(), 2)
    assert e.value.details == {"sign": 2}


def test_check_invariants_rejects_non_orthogonal_generator():
    one, two, zero = Fraction(1), Fraction(2), Fraction(0)
    bad = Generator(
        kind="orthogonal",
        name="bad",
        matrix=(
            (two, zero, zero, zero),
            (zero, one, zero, zero),
            (zero, zero, one, zero),
            (zero, zero, zero, one),
        ),
    )
    with pytest.raises(AlgebraError):
        TameElement.letter(bad).check_invariants()
