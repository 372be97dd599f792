"""
tests.services.test_tame_group_service

================================================================================
Unit Tests for the Tame Group Service
================================================================================

Overview
--------
Tests `src.services.tame_group_service`: generator validation, the explicit
hyperbolic element g, square stabilisers and the derivation of the
constraints on a common stabiliser of C and gC.

Tested Responsibilities
------------------------
- `make_generator` accepts q-orthogonal matrices and x1/x3 polynomials only
- `explicit_g` expands the word rho * e * tau * e to its displayed formula
- `act_on_vertex` moves [x1] along the orbit of g
- `stabilizer_family` and `stabilizer_element` agree and preserve q when c*d = 0
- `derive_common_stabilizer_constraints` reduces to a^6 = b^6 = 1, c = d = 0
- `check_parameters` and `q_check`
- The action law (st)·v = s·(t·v) on random words, and O(q)-invariance of type-3 classes

Key Characteristics
--------------------
- Exact rational arithmetic throughout; no tolerances
"""

import random
from fractions import Fraction

import pytest

from src.algebra.param_coeff import ParamCoeff
from src.algebra.polymap import PolyMap4, q_polynomial, quadratic_form_pullback
from src.algebra.polynomial import GroundPoly, ParamPoly
from src.exceptions.custom_exceptions import AlgebraError, BadVariables, NotOrthogonal
from src.models.orbit_vertex import Type1Vertex, Type2Vertex, Type3Vertex, type3_equal
from src.services import tame_group_service as tame

x1, x2, x3, x4 = GroundPoly.variables()


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def test_make_generator_orthogonal():
    generator = tame.make_generator(matrix=[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], name="rho")
    assert generator.kind == "orthogonal"
    assert generator.forward == tame.reversal().forward


@pytest.mark.parametrize(
    "matrix",
    [
        [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
    ],
)
def test_make_generator_rejects_bad_matrices(matrix):
    with pytest.raises(NotOrthogonal):
        tame.make_generator(matrix=matrix)


def test_make_generator_elementary():
    generator = tame.make_generator(polynomial=x1 * x3 - 2)
    assert generator.kind == "elementary"
    assert generator.name == "e[x1*x3 - 2]"


def test_make_generator_rejects_bad_polynomials():
    """
    Tests that the elementary polynomial may only mention x1 and x3.

    :return: None
    :rtype: None
    """
    with pytest.raises(BadVariables) as e:
        tame.make_generator(polynomial=x1 + x2 * x4)
    assert e.value.details["variables"] == ["x2", "x4"]
    with pytest.raises(AlgebraError):
        tame.make_generator(polynomial=x1.to_param())
    with pytest.raises(AlgebraError):
        tame.make_generator()
    with pytest.raises(AlgebraError):
        tame.make_generator(matrix=[[1]], polynomial=x1)


# ---------------------------------------------------------------------------
# The element g and its action
# ---------------------------------------------------------------------------


def test_explicit_g_matches_formula():
    g = tame.explicit_g()
    forward, inverse = tame.explicit_g_formula()
    assert g.forward == forward
    assert g.inverse == inverse
    assert g.render_word() == "rho * e * tau * e"


def test_action_of_g_on_base_vertex():
    g = tame.explicit_g()
    v = Type1Vertex(x1)
    gv = tame.act_on_vertex(g, v)
    assert gv == Type1Vertex(x4)
    assert tame.act_on_vertex(g, gv) == Type1Vertex(x1 - x2 * x4**2 - x3 * x4**2 + x4**5)
    assert tame.act_on_vertex(g.inverted(), gv) == v


def test_element_from_word_checks_invariants():
    element = tame.element_from_word([(tame.corner_swap_2(), 1), (tame.elementary_x1_squared(), -1)])
    assert element.render_word() == "pi2 * e^-1"
    assert quadratic_form_pullback(element.forward) == q_polynomial()


def test_elementary_fixes_base_edge():
    e = tame.element_from_word([(tame.elementary_x1_squared(), 1)])
    assert tame.act_on_vertex(e, Type1Vertex(x1)) == Type1Vertex(x1)
    assert tame.act_on_vertex(e, Type2Vertex(x1, x3)) == Type2Vertex(x1, x3)
    assert tame.act_on_vertex(e, Type2Vertex(x1, x2)) == Type2Vertex(x1, x2 - x1**3)


# ---------------------------------------------------------------------------
# Square stabilisers
# ---------------------------------------------------------------------------


def test_stabilizer_family_pullback():
    """
    Tests that q pulls back along the family to q - c*d*x1^2.

    :return: None
    :rtype: None
    """
    p1 = ParamPoly.variable(0)
    cd = ParamCoeff.parameter("c") * ParamCoeff.parameter("d")
    family = tame.stabilizer_family()
    assert quadratic_form_pullback(family) == q_polynomial(ParamPoly) - p1 * p1 * cd
    assert tame.stabilizer_family(primed=True).specialize(tame.identity_parameters()).is_identity()


def test_stabilizer_element():
    element = tame.stabilizer_element(2, 3, c=1)
    assert element.forward == tame.stabilizer_family().specialize({"a": 2, "b": 3, "c": 1, "d": 0})
    other = tame.stabilizer_element(-1, 5, d=2)
    assert other.forward == PolyMap4([-x1, 5 * x2, Fraction(1, 5) * (x3 + 2 * x1), -(x4 + 2 * x2)])


def test_stabilizer_element_rejects_bad_parameters():
    with pytest.raises(AlgebraError):
        tame.stabilizer_element(0, 1)
    with pytest.raises(AlgebraError) as e:
        tame.stabilizer_element(1, 1, c=1, d=1)
    assert e.value.details == {"c": "1", "d": "1"}


# ---------------------------------------------------------------------------
# Common stabiliser of C and gC
# ---------------------------------------------------------------------------


def test_derive_common_stabilizer_constraints():
    report = tame.derive_common_stabilizer_constraints()
    assert report.summary == ["a^6 - 1", "b^6 - 1", "c", "d"]
    assert report.mirror == ["a^5 - a'", "b - b'", "c'", "d'"]
    assert report.solution_count == 36
    assert len(report.steps) == len(tame.ISOLATION_STEPS)
    assert all(step.consistent for step in report.steps if step.kind == "power")
    assert report.equations


def test_constraint_equations_vanish_at_identity():
    point = tame.identity_parameters()
    assert point["a"] == 1 and point["d'"] == 0
    assert all(coeff.specialize(point) == 0 for _, _, coeff in tame.constraint_equations())


def test_check_parameters():
    assert tame.check_parameters({}).satisfied
    rejected = tame.check_parameters({"a": 2})
    assert not rejected.satisfied
    assert rejected.violated
    assert rejected.values["a"] == "2"
    assert tame.check_parameters({"a": -1, "b": -1, "a'": -1, "b'": -1}).satisfied
    with pytest.raises(AlgebraError):
        tame.check_parameters({"e": 1})


# ---------------------------------------------------------------------------
# q-invariance spot checks
# ---------------------------------------------------------------------------


def test_random_word_lengths():
    rng = random.Random(7)
    for _ in range(20):
        word = tame.random_word(rng, 3)
        assert 1 <= len(word) <= 3
        assert all(sign in (1, -1) for _, sign in word)


def test_q_check():
    report = tame.q_check(5, 3, 1)
    assert report.passed
    assert len(report.rows) == 6
    assert report.rows[0].word == "rho * e * tau * e"


# ---------------------------------------------------------------------------
# Action on vertices
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "vertex",
    [Type1Vertex(x1), Type2Vertex(x1, x2), Type3Vertex(PolyMap4.identity())],
    ids=["type1", "type2", "type3"],
)
def test_action_law_on_random_words(vertex):
    """
    Tests that acting by a product equals acting by its factors in turn, on
    seeded random words whose product has length at most 4.

    :param vertex: Base vertex of each type
    :type vertex: OrbitVertex
    :return: None
    :rtype: None
    """
    rng = random.Random(vertex.kind)
    for _ in range(12):
        s = tame.element_from_word(tame.random_word(rng, 2))
        t = tame.element_from_word(tame.random_word(rng, 2))
        assert tame.act_on_vertex(s * t, vertex) == tame.act_on_vertex(s, tame.act_on_vertex(t, vertex))
        assert tame.act_on_vertex(t.inverted(), tame.act_on_vertex(t, vertex)) == vertex


def test_type3_class_is_invariant_under_q_recombination():
    rng = random.Random(19)
    linear = [
        tame.swap_23(),
        tame.reversal(),
        tame.swap_14(),
        tame.corner_swap_2(),
        tame.corner_swap_3(),
        tame.make_generator(matrix=[[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, Fraction(1, 2)]], name="s"),
        tame.make_generator(matrix=[[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 1]], name="h"),
    ]
    for _ in range(15):
        u = tame.element_from_word(tame.random_word(rng, 3)).inverse
        word = [(rng.choice(linear), rng.choice((1, -1))) for _ in range(rng.randint(1, 4))]
        recombined = tame.element_from_word(word).forward.compose(u)
        assert type3_equal(u.components, recombined.components)
        assert Type3Vertex(u).render() == Type3Vertex(recombined).render()
        stretched = [2 * u.components[0], *u.components[1:]]
        assert not type3_equal(u.components, stretched)
