"""
tests.models.test_generator

================================================================================
Unit Tests for Tame Generators
================================================================================

Overview
--------
Tests `src.models.generator`: forward and inverse maps of orthogonal and
elementary generators and the closed-form inverse of a q-orthogonal matrix.

Tested Responsibilities
------------------------
- Elementary maps (x1, x2 + x1*P, x3, x4 + x3*P) and their inverses
- Orthogonal maps from signed permutation matrices
- `inverse_orthogonal` returns a two-sided inverse
- Rendering of letters
"""

from src.algebra.polymap import PolyMap4
from src.algebra.polynomial import GroundPoly
from src.models.generator import Generator, inverse_orthogonal
from src.services.tame_group_service import corner_swap_2, corner_swap_3, elementary_x1_squared, swap_23

x1, x2, x3, x4 = GroundPoly.variables()


def test_elementary_forward_and_inverse():
    e = elementary_x1_squared()
    assert e.kind == "elementary"
    assert e.forward == PolyMap4([x1, x2 + x1**3, x3, x4 + x3 * x1**2])
    assert e.inverse == PolyMap4([x1, x2 - x1**3, x3, x4 - x3 * x1**2])
    assert e.forward.compose(e.inverse).is_identity()


def test_orthogonal_permutation():
    tau = swap_23()
    assert tau.forward == PolyMap4([x1, x3, x2, x4])
    assert tau.inverse == tau.forward


def test_corner_swap_maps():
    assert corner_swap_2().forward == PolyMap4([x2, x1, -x4, -x3])
    assert corner_swap_3().forward == PolyMap4([x3, x1, -x4, -x2])


def test_inverse_orthogonal_is_two_sided():
    """
    Tests that A·Mᵀ·A inverts a q-orthogonal matrix that is not an involution.

    :return: None
    :rtype: None
    """
    pi3 = corner_swap_3()
    assert pi3.forward.compose(pi3.inverse).is_identity()
    assert pi3.inverse.compose(pi3.forward).is_identity()
    assert not pi3.forward.compose(pi3.forward).is_identity()
    assert inverse_orthogonal(inverse_orthogonal(pi3.matrix)) == pi3.matrix


def test_render():
    g = Generator(kind="elementary", name="e", polynomial=x1)
    assert g.render() == "e"
    assert g.render(-1) == "e^-1"
    assert g.map_for(-1) == g.inverse
