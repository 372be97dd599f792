"""
tests.services.test_corpus_service

================================================================================
Unit Tests for the Bundled Complex Corpus
================================================================================
"""

from pathlib import Path

import pytest

from src.crud.complexes import dump_complex
from src.exceptions.custom_exceptions import InputError
from src.services import corpus_service as corpus
from src.services.geometry_service import validate

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.mark.parametrize("name", sorted(corpus.default_corpus()))
def test_corpus_entries_are_valid_and_match_fixtures(name):
    """
    Tests that each bundled complex validates and equals its fixture file.

    :param name: Corpus entry name
    :type name: str
    :return: None
    :rtype: None
    """
    c = corpus.default_corpus()[name]
    assert validate(c).valid
    assert (FIXTURES / f"{name}.json").read_text(encoding="utf-8") == dump_complex(c)


def test_grid_layout():
    c = corpus.grid(3, 2, origin=(-1, 0))
    assert c.label(0) == "(-1,0)"
    assert c.label(5) == "(1,1)"
    assert len(c.edges) == 7
    assert len(c.polygons) == 2


def test_grid_shift_is_partial():
    c = corpus.grid(3, 3)
    shift = corpus.grid_shift(c, 1, 0)
    assert len(shift) == 6
    assert shift[0] == 3


def test_square_chain():
    c = corpus.square_chain(2)
    assert len(c) == 7
    assert corpus.square_chain_axis(2) == [0, 1, 3, 4, 6]
    assert corpus.square_chain_shift(2) == {0: 3, 1: 4, 2: 5, 3: 6}


def test_trees():
    assert len(corpus.balanced_tree(2, 3)) == 15
    first, second = corpus.random_tree(20, seed=4), corpus.random_tree(20, seed=4)
    assert first.edges == second.edges
    assert len(first.edges) == 19
    assert first.is_connected()


def test_wheel_and_path():
    assert len(corpus.wheel(5).polygons) == 5
    assert corpus.path_shift(4, step=2) == {0: 2, 1: 3}
    with pytest.raises(InputError):
        corpus.wheel(2)
    with pytest.raises(InputError) as e:
        corpus.path_graph(0)
    assert e.value.details == {"n": 0}
