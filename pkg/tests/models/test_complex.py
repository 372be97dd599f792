"""
tests.models.test_complex

================================================================================
Unit Tests for the Polygonal Complex Model
================================================================================

Overview
--------
Tests `src.models.complex.PolygonalComplex`, the in-memory complex every
checker runs on.

Tested Responsibilities
------------------------
- Construction from label mappings or bare id iterables
- The 1-skeleton keeps only well-formed edges
- Corners, incident edges, distances and components
- Label lookups and unknown-vertex errors

Key Characteristics
--------------------
- Uses small hand-built complexes and the bundled corpus builders
"""

import pytest

from src.exceptions.custom_exceptions import ComplexError
from src.models.complex import PolygonalComplex, edge_key
from src.services.corpus_service import glued_squares_vertex, grid


@pytest.fixture
def square():
    return grid(2, 2)


def test_edge_key_orders_endpoints():
    assert edge_key(3, 1) == (1, 3)
    assert edge_key(1, 3) == (1, 3)


def test_labels_default_to_ids():
    c = PolygonalComplex(range(3), [(0, 1)])
    assert c.labels == {0: "0", 1: "1", 2: "2"}
    assert len(c) == 3


def test_square_structure(square):
    """
    Tests the derived structure of the unit square.

    :param square: The 2x2 grid fixture
    :type square: PolygonalComplex
    :return: None
    :rtype: None
    """
    assert square.label(3) == "(1,1)"
    assert square.vertex_id("(1,0)") == 2
    assert square.edges == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert square.polygons == ((0, 2, 3, 1),)
    assert square.corners[0] == [((0, 1), (0, 2))]
    assert square.incident_edges(3) == [(1, 3), (2, 3)]
    assert square.distances[0][3] == 2
    assert square.is_connected()


def test_skeleton_ignores_malformed_edges():
    c = PolygonalComplex(range(3), [(0, 1), (1, 1), (0, 5), (0, 1)])
    assert c.edges == [(0, 1)]
    assert len(c.raw_edges) == 4
    assert c.components == [frozenset({0, 1}), frozenset({2})]
    assert not c.is_connected()


def test_empty_complex_is_not_connected():
    assert not PolygonalComplex([]).is_connected()


def test_unknown_vertex_errors(square):
    with pytest.raises(ComplexError) as e:
        square.require_vertex(9)
    assert e.value.details == {"vertex": 9}
    with pytest.raises(ComplexError):
        square.vertex_id("(5,5)")


def test_graph_is_frozen(square):
    with pytest.raises(Exception):
        square.graph.add_edge(0, 3)


def test_polygons_within():
    c = glued_squares_vertex()
    assert c.polygons_within({0, 1, 2, 3, 4}) == [(0, 1, 2, 3)]
    assert c.polygon_edges((0, 1, 2, 3)) == [(0, 1), (1, 2), (2, 3), (0, 3)]
