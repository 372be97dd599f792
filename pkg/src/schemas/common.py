"""
src.schemas.common

================================================================================
Shared Pydantic Schemas
================================================================================

Overview
--------
Defines the building blocks shared by every report document: the error
payload returned by the CLI on exit status 2, the violation record produced
by validators and checkers, and the `Distance` annotated type that
serialises infinite distances and angles as the string ``"inf"``.

Key Characteristics
--------------------
- Strict validation with Pydantic BaseModel
- Deterministic JSON through ``model_dump(mode="json")``
"""

import math
from typing import Any, Dict, Union

from pydantic import BaseModel, Field, PlainSerializer
from typing_extensions import Annotated

from src.config.constants import INFINITY_LABEL


def serialize_distance(value: Union[int, float]) -> Union[int, str]:
    """
    Render a possibly infinite integer quantity for JSON output.

    :param value: An integer or ``math.inf``.
    :type value: Union[int, float]
    :return: The integer, or ``"inf"``.
    :rtype: Union[int, str]
    """
    if isinstance(value, float) and math.isinf(value):
        return INFINITY_LABEL
    return int(value)


Distance = Annotated[
    Union[int, float],
    PlainSerializer(serialize_distance, return_type=Union[int, str], when_used="always"),
]


class ErrorResponse(BaseModel):
    """
    Schema of the JSON error payload printed by the CLI.

    :param error: Error kind (the exception class name).
    :type error: str
    :param message: Human-readable message.
    :type message: str
    :param details: Structured context such as the tripped bound or the JSON position.
    :type details: Dict[str, Any]
    """

    error: str
    message: str
    details: Dict[str, Any] = Field(default_factory=dict)


class Violation(BaseModel):
    """
    One failed condition with re-checkable witnesses.

    :param condition: Name of the failed condition.
    :type condition: str
    :param witness: Witness vertices and paths.
    :type witness: Dict[str, Any]
    :param measured: Measured quantities explaining the failure.
    :type measured: Dict[str, Any]
    """

    condition: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    measured: Dict[str, Any] = Field(default_factory=dict)
