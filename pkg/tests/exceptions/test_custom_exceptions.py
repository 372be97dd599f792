"""
tests.exceptions.test_custom_exceptions

================================================================================
Unit Tests for Custom Exception Classes
================================================================================

Overview
--------
Verifies the behavior of custom exception types defined in
`src.exceptions.custom_exceptions`. These exceptions carry a message and a
details dictionary that the CLI prints as its JSON error payload.

Tested Responsibilities
------------------------
- Every exception carries an error message and optional details dictionary
- Details default to an empty dictionary when not provided
- The hierarchy lets handlers catch all geometry errors as ComplexError
"""

import pytest

from src.exceptions import custom_exceptions

ALL_ERRORS = [
    custom_exceptions.ConfigurationError,
    custom_exceptions.InputError,
    custom_exceptions.AlgebraError,
    custom_exceptions.NotOrthogonal,
    custom_exceptions.BadVariables,
    custom_exceptions.DegenerateTuple,
    custom_exceptions.ComplexError,
    custom_exceptions.EdgeNotIncident,
    custom_exceptions.NotGeodesic,
    custom_exceptions.NoPath,
    custom_exceptions.AngleTooSmall,
    custom_exceptions.NotInStabilizer,
    custom_exceptions.VerticesMissing,
    custom_exceptions.BudgetExceeded,
]


@pytest.mark.parametrize("exc_class", ALL_ERRORS)
def test_error_with_details(exc_class):
    """
    Tests that each exception carries its message and provided details dictionary.

    :param exc_class: Exception class under test
    :type exc_class: type
    :return: None
    :rtype: None
    """
    exc = exc_class("check failed", details={"vertex": 3})
    assert str(exc) == "check failed"
    assert exc.details == {"vertex": 3}
    assert isinstance(exc, custom_exceptions.ToolkitError)


@pytest.mark.parametrize("exc_class", ALL_ERRORS)
def test_error_without_details(exc_class):
    exc = exc_class("check failed")
    assert exc.details == {}


@pytest.mark.parametrize(
    "exc_class",
    [custom_exceptions.EdgeNotIncident, custom_exceptions.NotGeodesic, custom_exceptions.NoPath],
)
def test_geometry_errors_are_complex_errors(exc_class):
    assert issubclass(exc_class, custom_exceptions.ComplexError)


def test_details_are_keyword_only():
    with pytest.raises(TypeError):
        custom_exceptions.InputError("bad", {"line": 1})
