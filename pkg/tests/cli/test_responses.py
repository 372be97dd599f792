"""
tests.cli.test_responses

================================================================================
Unit Tests for Report Rendering
================================================================================
"""

import json
import math

from src.cli.responses import exit_status, render, to_json, to_text
from src.schemas.common import Violation
from src.schemas.reports import CheckReport, DistanceReport, ParameterCheck, ValidationReport


def test_to_json_is_sorted_and_finite():
    text = to_json(DistanceReport(source=0, target=2, distance=math.inf))
    assert json.loads(text) == {"distance": "inf", "source": 0, "target": 2}
    assert text.endswith("\n")


def test_to_text_flattens_nested_values():
    report = CheckReport(
        check="scp",
        passed=False,
        parameters={"A": 2},
        violations=[Violation(condition="loop edge", witness={"edge": [1, 1]})],
    )
    lines = to_text(report).splitlines()
    assert "check: scp" in lines
    assert "parameters.A: 2" in lines
    assert "violations[0].condition: loop edge" in lines
    assert "violations[0].witness.edge: 1, 1" in lines
    assert "violations[0].measured: {}" in lines
    assert "excluded_pairs: " in lines


def test_render_selects_format():
    report = DistanceReport(source=0, target=3, distance=2)
    assert render(report, "text") == "distance: 2\nsource: 0\ntarget: 3\n"
    assert render(report, "json") == to_json(report)


def test_exit_status():
    assert exit_status(DistanceReport(source=0, target=0, distance=0)) == 0
    assert exit_status(CheckReport(check="scp", passed=True)) == 0
    assert exit_status(CheckReport(check="scp", passed=False)) == 1
    assert exit_status(ParameterCheck(values={}, satisfied=False)) == 1
    failing = ValidationReport(
        valid=False,
        connected=True,
        component_count=1,
        vertex_count=1,
        edge_count=0,
        polygon_count=0,
    )
    assert exit_status(failing) == 1
