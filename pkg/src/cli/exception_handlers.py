"""
src.cli.exception_handlers

================================================================================
CLI Exception Handlers
================================================================================

Overview
--------
Intercepts toolkit exceptions raised while a command runs and turns them
into the exit-status contract of the CLI: status 2 and a structured JSON
error payload on stdout.

Responsibilities
----------------
- Map each exception class to an error kind shown to the user
- Build the `ErrorResponse` payload with the exception's details
- Provide `ToolkitGroup`, a click group that applies the handlers to every
  subcommand

Key Characteristics
--------------------
- Consistent error schema across all subcommands
- The most specific registered class wins (subclasses before bases)
"""

import json
from typing import Dict, Type

import click

from src.config.constants import EXIT_USAGE
from src.exceptions.custom_exceptions import (
    AlgebraError,
    AngleTooSmall,
    BadVariables,
    BudgetExceeded,
    ComplexError,
    ConfigurationError,
    DegenerateTuple,
    EdgeNotIncident,
    InputError,
    NoPath,
    NotGeodesic,
    NotInStabilizer,
    NotOrthogonal,
    ToolkitError,
    VerticesMissing,
)
from src.schemas.common import ErrorResponse
from src.utils.logger_util import log_error, to_loggable

ERROR_KINDS: Dict[Type[ToolkitError], str] = {
    BudgetExceeded: "Budget Exceeded",
    InputError: "Input Error",
    ConfigurationError: "Configuration Error",
    EdgeNotIncident: "Edge Not Incident",
    NotGeodesic: "Not Geodesic",
    NoPath: "No Path",
    ComplexError: "Complex Error",
    AngleTooSmall: "Angle Too Small",
    NotOrthogonal: "Not Orthogonal",
    BadVariables: "Bad Variables",
    DegenerateTuple: "Degenerate Tuple",
    NotInStabilizer: "Not In Stabilizer",
    VerticesMissing: "Vertices Missing",
    AlgebraError: "Algebra Error",
}


def error_kind(exc: ToolkitError) -> str:
    for cls in type(exc).__mro__:
        if cls in ERROR_KINDS:
            return ERROR_KINDS[cls]
    return "Toolkit Error"


def toolkit_error_handler(exc: ToolkitError) -> ErrorResponse:
    """
    Build the error payload of a toolkit exception.

    :param exc: The raised exception.
    :type exc: ToolkitError
    :return: Payload with kind, message and details.
    :rtype: ErrorResponse
    """
    return ErrorResponse(error=error_kind(exc), message=str(exc), details=to_loggable(exc.details))


class ToolkitGroup(click.Group):
    """Click group translating `ToolkitError` into exit status 2 with a JSON payload."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ToolkitError as exc:
            log_error(exc, function_name=ctx.info_name or "cli", context=exc.details)
            payload = toolkit_error_handler(exc).model_dump(mode="json")
            click.echo(json.dumps(payload, sort_keys=True, indent=2))
            ctx.exit(EXIT_USAGE)
