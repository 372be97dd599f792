"""
src.cli.responses

================================================================================
Output Rendering
================================================================================

Overview
--------
Renders report models for stdout and decides the exit status they imply.

- ``json``: ``model_dump(mode="json")`` with sorted keys and indent 2
- ``text``: one ``key: value`` line per leaf, nested keys joined with dots,
  list items indexed

Exit status 1 is returned when a report records a failed check: a false
``valid``, ``passed``, ``consistent``, ``is_grid`` or ``satisfied`` field.
"""

import json
from typing import Any, Iterator, List

from pydantic import BaseModel

from src.config.constants import EXIT_OK, EXIT_VIOLATIONS

VERDICT_FIELDS = ("valid", "passed", "consistent", "is_grid", "satisfied")


def to_json(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def _lines(prefix: str, value: Any) -> Iterator[str]:
    if isinstance(value, dict):
        if not value:
            yield f"{prefix}: {{}}"
        for key in sorted(value):
            yield from _lines(f"{prefix}.{key}" if prefix else str(key), value[key])
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for i, item in enumerate(value):
            yield from _lines(f"{prefix}[{i}]", item)
    elif isinstance(value, list):
        yield f"{prefix}: " + ", ".join(str(item) for item in value)
    else:
        yield f"{prefix}: {value}"


def to_text(report: BaseModel) -> str:
    lines: List[str] = list(_lines("", report.model_dump(mode="json")))
    return "\n".join(lines) + "\n"


def render(report: BaseModel, output_format: str) -> str:
    return to_text(report) if output_format == "text" else to_json(report)


def exit_status(report: BaseModel) -> int:
    """
    Exit status implied by a report.

    :param report: Any report model.
    :type report: BaseModel
    :return: ``EXIT_VIOLATIONS`` if a verdict field is False, else ``EXIT_OK``.
    :rtype: int
    """
    for name in VERDICT_FIELDS:
        if getattr(report, name, True) is False:
            return EXIT_VIOLATIONS
    return EXIT_OK
