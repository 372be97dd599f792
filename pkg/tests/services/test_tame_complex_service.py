"""
tests.services.test_tame_complex_service

================================================================================
Unit Tests for Portions of the Tame Square Complex
================================================================================

Overview
--------
Tests `src.services.tame_complex_service`, which builds finite portions of
the square complex from tame elements and verifies the grid between [x1]
and g²[x1].

Tested Responsibilities
------------------------
- `build_from_elements` on the identity square
- `enumerate_ball` bounds and the grid it produces
- `verify_grid` positions, distances and the action check
- Link explorations at [x1] and the stabiliser guard
- `portion_to_document` serialisation
- The ball over g alone: squares of id, g and g², and orbit vertices v, gv, g²v
- Square invariance under the stabiliser family, ball dedup and nesting
"""

import math
import random

import pytest

from src.algebra.polynomial import GroundPoly
from src.exceptions.custom_exceptions import BudgetExceeded, NotInStabilizer, VerticesMissing
from src.models.orbit_vertex import Type1Vertex, Type2Vertex
from src.models.tame_element import TameElement
from src.services import tame_complex_service as tcs
from src.services.tame_group_service import act_on_vertex, elementary_x1_squared, explicit_g, stabilizer_element, swap_23

x1, x2, x3, x4 = GroundPoly.variables()


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("WORD_LENGTH", "GRID_WORD_LENGTH", "VERTEX_CAP"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


@pytest.fixture
def identity_portion():
    return tcs.build_from_elements([TameElement.identity()])


@pytest.fixture(scope="module")
def grid_ball():
    return tcs.enumerate_ball(tcs.grid_generators(), 2)


def test_identity_square(identity_portion):
    doc = tcs.portion_to_document(identity_portion)
    assert [v.type for v in doc.vertices] == [1, 2, 3, 2]
    assert doc.vertices[0].components == ["x1"]
    assert doc.vertices[1].components == ["x1", "x2"]
    assert doc.vertices[2].components == ["x1", "x2", "x3", "x4"]
    assert doc.vertices[2].form == "e1*e4 - e2*e3"
    assert doc.vertices[0].form is None
    assert doc.squares == [[0, 1, 2, 3]]
    assert doc.edges == [[0, 1], [0, 3], [1, 2], [2, 3]]
    assert doc.elements == ["id"]
    assert identity_portion.square_count == 1


def test_duplicate_squares_are_merged():
    tau = TameElement.letter(swap_23())
    portion = tcs.build_from_elements([TameElement.identity(), tau])
    assert portion.square_count == 1
    assert len(portion.vertices) == 4


def test_vertex_cap(clean_env):
    with pytest.raises(BudgetExceeded) as e:
        tcs.enumerate_ball(tcs.grid_generators(), 1, vertex_cap=3)
    assert e.value.details["bound"] == "VERTEX_CAP"


def test_word_length_bound(clean_env):
    with pytest.raises(BudgetExceeded) as e:
        tcs.enumerate_ball(tcs.grid_generators(), 4)
    assert e.value.details == {"bound": "WORD_LENGTH", "limit": 3, "reached": 4}


def test_verify_grid(grid_ball):
    """
    Tests that interval([x1], g²[x1]) in the length-2 ball is the 4x4 grid
    with g[x1] at its centre.

    :param grid_ball: Portion enumerated from the grid generators
    :type grid_ball: TamePortion
    :return: None
    :rtype: None
    """
    report = tcs.verify_grid(grid_ball, generators=tcs.grid_generators())
    assert report.is_grid
    assert report.positions == {"v": [0, 0], "gv": [2, 2], "g2v": [4, 4]}
    assert report.distances == {"v_gv": 4, "v_g2v": 8, "gv_g2v": 4}
    assert report.vertex_count == 25
    assert report.edge_count == 40
    assert report.square_count == 16
    assert report.action_consistent
    assert report.relative_to_portion
    assert report.word_length == 2
    assert report.base_vertex == "[x1]"
    assert report.generators[0] == "rho * e * tau * e"
    assert report.portion_vertex_count == 147
    assert report.portion_square_count == 68


def test_verify_grid_needs_orbit_vertices(identity_portion):
    with pytest.raises(VerticesMissing) as e:
        tcs.verify_grid(identity_portion)
    assert set(e.value.details["missing"]) == {"gv", "g2v"}


def test_elementary_link_exploration():
    report = tcs.elementary_link_exploration(4)
    assert report.base_vertex == "[x1]"
    assert report.base_node == ["[x1]", "[x1, x2]"]
    assert [row.distance for row in report.rows] == [0, 0, 2, 2, 2]
    assert report.portion_vertex_count == 10
    assert all(row.upper_bound for row in report.rows)


def test_partial_link_exploration(identity_portion):
    base = tcs.base_vertex()
    e = TameElement.letter(elementary_x1_squared())
    report = tcs.partial_link_exploration(identity_portion, base, [TameElement.identity(), e], Type2Vertex(x1, x2))
    assert report.rows[0].distance == 0
    assert report.rows[1].distance == math.inf

    with pytest.raises(NotInStabilizer):
        tcs.partial_link_exploration(identity_portion, base, [explicit_g()], Type2Vertex(x1, x2))


def test_common_stabilizer_report():
    assert tcs.common_stabilizer_report().summary == ["a^6 - 1", "b^6 - 1", "c", "d"]


@pytest.fixture(scope="module")
def g_ball():
    return tcs.enumerate_ball([explicit_g()], 2)


def _square_ids(portion, t):
    return frozenset(portion.find(vertex) for vertex in tcs.standard_square_vertices(t))


def test_ball_over_g_holds_squares_of_powers(g_ball):
    """
    Tests that the length-2 ball over {g} holds the squares of id, g and g²
    together with v = [x1], gv = [x4] and g²v.

    :param g_ball: Portion enumerated from g alone
    :type g_ball: TamePortion
    :return: None
    :rtype: None
    """
    g = explicit_g()
    assert g_ball.elements == (TameElement.identity(), g, g.inverted(), g**2, g**-2)
    assert g_ball.square_count == 5

    polygons = {frozenset(p) for p in g_ball.complex.polygons}
    for power in (0, 1, 2):
        ids = _square_ids(g_ball, g**power)
        assert None not in ids
        assert ids in polygons

    v = tcs.base_vertex()
    gv = act_on_vertex(g, v)
    g2v = act_on_vertex(g, gv)
    assert v == Type1Vertex(x1)
    assert gv == Type1Vertex(x4)
    assert g2v == Type1Vertex(x1 - x2 * x4**2 - x3 * x4**2 + x4**5)
    assert all(g_ball.find(vertex) is not None for vertex in (v, gv, g2v))


def test_verify_grid_on_ball_over_g(g_ball):
    report = tcs.verify_grid(g_ball)
    assert not report.is_grid
    assert report.distances == {"v_gv": math.inf, "v_g2v": math.inf, "gv_g2v": math.inf}
    assert report.vertex_count == 0
    assert report.action_consistent
    assert report.model_dump()["distances"]["v_g2v"] == "inf"


def test_build_from_identity_and_g():
    portion = tcs.build_from_elements([TameElement.identity(), explicit_g()])
    assert portion.square_count == 2
    assert len(portion.vertices) == 8
    assert len(portion.complex.components) == 2
    assert portion.find(Type1Vertex(x1)) == 0
    assert portion.find(Type1Vertex(x4)) == 4
    assert portion.find(Type2Vertex(x4, x2 - x4**3)) == 5


def test_squares_invariant_under_stabilizer_family(grid_ball):
    rng = random.Random(11)
    for t in rng.sample(list(grid_ball.elements), 10):
        a, b, shear = rng.choice((1, -1, 2, 3)), rng.choice((1, -2, 5)), rng.choice((-1, 1, 3))
        for c, d in ((0, 0), (shear, 0), (0, shear)):
            s = stabilizer_element(a, b, c, d)
            assert tcs.standard_square_vertices(t * s) == tcs.standard_square_vertices(t)
            assert tcs.build_from_elements([t, t * s]).square_count == 1


def test_ball_vertices_are_distinct(grid_ball):
    vertices = grid_ball.vertices
    assert len(set(vertices)) == len(vertices)
    for i, u in enumerate(vertices):
        assert grid_ball.find(u) == i
        assert all(u != w for w in vertices[i + 1 :])


def test_smaller_ball_embeds_in_larger(grid_ball):
    small = tcs.enumerate_ball(tcs.grid_generators(), 1)
    assert small.square_count < grid_ball.square_count
    mapping = {i: grid_ball.find(vertex) for i, vertex in enumerate(small.vertices)}
    assert None not in mapping.values()

    large_edges = set(grid_ball.complex.edges)
    for u, w in small.complex.edges:
        a, b = sorted((mapping[u], mapping[w]))
        assert (a, b) in large_edges

    large_squares = {frozenset(p) for p in grid_ball.complex.polygons}
    for square in small.complex.polygons:
        assert frozenset(mapping[x] for x in square) in large_squares
