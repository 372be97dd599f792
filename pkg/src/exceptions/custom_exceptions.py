"""
src.exceptions.custom_exceptions

================================================================================
Custom Exceptions for the Uber Contraction Toolkit
================================================================================

Overview
--------
This module defines custom exception classes for clearer, consistent error
handling across the toolkit. Every class carries an optional ``details``
dictionary with the measured quantities that explain the failure. They are
raised in services and models and caught in the CLI exception handlers,
which translate them into exit status 2 and a JSON error payload.
"""

from typing import Any, Dict, Optional


class ToolkitError(Exception):
    """
    Base class of all domain errors raised by the toolkit.

    :param message: The error message describing the failure.
    :type message: str
    :param details: Optional dictionary containing additional error details.
    :type details: Optional[Dict[str, Any]]
    """

    def __init__(self, message: str, *, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class ConfigurationError(ToolkitError):
    """Raised when an environment setting cannot be parsed."""


class InputError(ToolkitError):
    """
    Raised when a command-line input (file, JSON document, vertex id) is unusable.

    Malformed JSON carries ``line`` and ``column`` in ``details``.
    """


class AlgebraError(ToolkitError):
    """Raised for malformed polynomial data or non-invertible divisions."""


class NotOrthogonal(ToolkitError):
    """Raised when a 4x4 matrix does not preserve the quadratic form q."""


class BadVariables(ToolkitError):
    """Raised when an elementary generator's polynomial mentions x2 or x4."""


class DegenerateTuple(ToolkitError):
    """Raised when orbit-vertex components are linearly dependent."""


class ComplexError(ToolkitError):
    """Raised when a query names vertices or edges absent from the complex."""


class EdgeNotIncident(ComplexError):
    """Raised when an angle is requested for an edge not containing the base vertex."""


class NotGeodesic(ComplexError):
    """Raised when a path handed to an angle query is not a geodesic from the base vertex."""


class NoPath(ComplexError):
    """Raised when two vertices lie in different components."""


class AngleTooSmall(ToolkitError):
    """Raised when an axis does not make a big enough angle at the chosen vertex."""


class NotInStabilizer(ToolkitError):
    """Raised when an element expected to fix a vertex moves it."""


class VerticesMissing(ToolkitError):
    """Raised when grid verification cannot find v, gv or g^2 v in the portion."""


class BudgetExceeded(ToolkitError):
    """
    Raised when an enumeration passes its configured budget.

    ``details`` names the bound (``bound``), its value (``limit``) and the
    count reached (``reached``).
    """
