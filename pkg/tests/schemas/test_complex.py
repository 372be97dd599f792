"""
tests.schemas.test_complex

================================================================================
Unit Tests for src.schemas.complex
================================================================================

Overview
--------
Tests the on-disk complex document and the tame portion dump document.

Tested Responsibilities
------------------------
- Default label and empty edge/polygon lists
- Type errors on malformed vertex entries
- Structurally bad edges pass parsing untouched
"""

import pytest
from pydantic import ValidationError

from src.schemas.complex import ComplexDocument, TamePortionDocument


def test_complex_document_defaults():
    """
    Tests that a document with only vertices gets empty edges and polygons.

    :return: None
    :rtype: None
    """
    document = ComplexDocument.model_validate({"vertices": [{"id": 0}, {"id": 1, "label": "b"}]})
    assert document.vertices[0].label == ""
    assert document.vertices[1].label == "b"
    assert document.edges == []
    assert document.polygons == []


def test_complex_document_keeps_loops():
    """
    Tests that a loop edge is accepted by the parser and left for the validator.

    :return: None
    :rtype: None
    """
    document = ComplexDocument.model_validate({"vertices": [{"id": 0}], "edges": [[0, 0]]})
    assert document.edges == [[0, 0]]


@pytest.mark.parametrize(
    "payload",
    [
        {"edges": [[0, 1]]},
        {"vertices": [{"label": "a"}]},
        {"vertices": [{"id": "zero"}]},
        {"vertices": [{"id": 0}], "edges": [["a", "b"]]},
    ],
)
def test_complex_document_invalid(payload):
    """
    Tests that missing vertices or non-integer ids are rejected.

    :param payload: Malformed document.
    :type payload: dict
    :return: None
    :rtype: None
    """
    with pytest.raises(ValidationError):
        ComplexDocument.model_validate(payload)


def test_tame_portion_document_round_dump():
    """
    Tests that a portion dump serializes vertex types and the optional word length.

    :return: None
    :rtype: None
    """
    document = TamePortionDocument(
        vertices=[{"id": 0, "type": 1, "components": ["x1"]}],
        edges=[],
        squares=[],
        elements=["id"],
    )
    dumped = document.model_dump(mode="json")
    assert dumped["vertices"] == [{"id": 0, "type": 1, "components": ["x1"]}]
    assert dumped["word_length"] is None
