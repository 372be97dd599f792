"""
tests.crud.test_complexes

================================================================================
Unit Tests for Complex Persistence
================================================================================

Overview
--------
Tests `src.crud.complexes`: reading and writing the JSON complex format and
exporting 1-skeletons and links as DOT text.

Tested Responsibilities
------------------------
- `parse_complex` / `load_complex` build complexes and reject bad input
- `dump_complex` / `save_complex` write deterministic JSON
- `complex_to_dot` and `link_to_dot` output

Key Characteristics
--------------------
- Uses pytest's tmp_path for file round trips
- Reads the bundled fixtures directory
"""

import json
from pathlib import Path

import pytest

from src.crud import complexes
from src.exceptions.custom_exceptions import InputError
from src.models.link import LinkGraph
from src.services.corpus_service import grid, single_triangle

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_parse_complex_defaults():
    c = complexes.parse_complex('{"vertices": [{"id": 0}, {"id": 1, "label": "b"}], "edges": [[0, 1]]}')
    assert c.labels == {0: "0", 1: "b"}
    assert c.edges == [(0, 1)]
    assert c.polygons == ()


def test_parse_complex_keeps_structural_problems():
    """
    Tests that loops and short polygons are parsed and left to the validator.

    :return: None
    :rtype: None
    """
    c = complexes.parse_complex('{"vertices": [{"id": 0}], "edges": [[0, 0]], "polygons": [[0]]}')
    assert c.raw_edges == ((0, 0),)
    assert c.polygons == ((0,),)


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"edges": []}', "Document does not match the complex format"),
        ('{"vertices": [{"id": "zero"}]}', "Document does not match the complex format"),
        ('{"vertices": [{"id": 0}, {"id": 0}]}', "Duplicate vertex id"),
    ],
)
def test_parse_complex_rejects_bad_documents(text, message):
    with pytest.raises(InputError) as e:
        complexes.parse_complex(text, source="inline")
    assert str(e.value) == message
    assert e.value.details["source"] == "inline"


def test_load_malformed_fixture_reports_position():
    with pytest.raises(InputError) as e:
        complexes.load_complex(FIXTURES / "malformed.json")
    assert str(e.value) == "Malformed JSON"
    assert {"line", "column", "reason"} <= set(e.value.details)


def test_load_missing_file(tmp_path):
    with pytest.raises(InputError) as e:
        complexes.load_complex(tmp_path / "absent.json")
    assert e.value.details["path"].endswith("absent.json")


def test_save_and_load(tmp_path):
    c = grid(2, 2)
    path = complexes.save_complex(c, tmp_path / "square.json")
    loaded = complexes.load_complex(path)
    assert loaded.labels == c.labels
    assert loaded.edges == c.edges
    assert loaded.polygons == c.polygons


def test_dump_complex_is_sorted_json():
    text = complexes.dump_complex(single_triangle())
    assert text.endswith("}\n")
    data = json.loads(text)
    assert list(data) == ["edges", "polygons", "vertices"]
    assert data["vertices"][2] == {"id": 2, "label": "2"}


def test_complex_to_dot():
    assert complexes.complex_to_dot(single_triangle()) == (
        'graph "complex" {\n'
        '  0 [label="0"];\n'
        '  1 [label="1"];\n'
        '  2 [label="2"];\n'
        "  0 -- 1;\n"
        "  0 -- 2;\n"
        "  1 -- 2;\n"
        "}\n"
    )


def test_link_to_dot():
    c = grid(2, 2)
    assert complexes.link_to_dot(c, LinkGraph.of(c, 0)) == (
        'graph "link_0" {\n'
        '  "0-1" [label="(0,1)"];\n'
        '  "0-2" [label="(1,0)"];\n'
        '  "0-1" -- "0-2";\n'
        "}\n"
    )


def test_dot_quotes_labels():
    c = complexes.parse_complex('{"vertices": [{"id": 0, "label": "a\\"b"}]}')
    assert '[label="a\\"b"]' in complexes.complex_to_dot(c)
