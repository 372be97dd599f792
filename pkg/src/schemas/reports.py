"""
src.schemas.reports

================================================================================
Pydantic Schemas for Query and Checker Reports
================================================================================

Overview
--------
Every command of the toolkit produces one of the documents below. They are
built by the services, serialised by the CLI with
``model_dump(mode="json")`` and ``json.dumps(..., sort_keys=True)`` and
rendered line by line for ``--format text``.

Responsibilities
----------------
- Geometry queries: distance, interval, angle, projection, link
- Validation and checker results with violations and witnesses
- Contraction constants and their witness balls
- Tame-complex reproduction: grid report, link exploration, stabiliser
  constraints and q-invariance checks

Key Characteristics
--------------------
- Infinite distances and angles serialise as ``"inf"``
- Lists are produced in sorted order by the services for byte-stable output
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.schemas.common import Distance, Violation


class ValidationReport(BaseModel):
    """
    Structural validation of a complex.

    :param valid: True iff no violation was found.
    :type valid: bool
    :param connected: True iff the 1-skeleton is connected.
    :type connected: bool
    :param component_count: Number of connected components.
    :type component_count: int
    :param violations: Every failed invariant.
    :type violations: List[Violation]
    """

    valid: bool
    connected: bool
    component_count: int
    vertex_count: int
    edge_count: int
    polygon_count: int
    violations: List[Violation] = Field(default_factory=list)


class DistanceReport(BaseModel):
    source: int
    target: int
    distance: Distance


class IntervalReport(BaseModel):
    source: int
    target: int
    distance: int
    geodesic_count: int
    interval: List[int]


class AngleReport(BaseModel):
    """
    An angle at ``vertex``; ``kind`` is ``"corner"`` (between two edges) or
    ``"vertex"`` (between two target vertices, minimised over geodesics).
    """

    kind: str
    vertex: int
    first: List[int]
    second: List[int]
    angle: Distance


class ProjectionReport(BaseModel):
    vertex: int
    line: List[int]
    distance: int
    projection: List[int]


class LinkReport(BaseModel):
    base: int
    nodes: List[List[int]]
    arcs: List[List[List[int]]]


class BallWitness(BaseModel):
    """
    A ball B(center, radius) disjoint from the line and its projection.

    :param center: Ball centre.
    :type center: int
    :param radius: Ball radius.
    :type radius: int
    :param projection: Closest-point projection of the ball onto the line.
    :type projection: List[int]
    :param diameter: Diameter of the projection.
    :type diameter: int
    """

    center: int
    radius: int
    projection: List[int]
    diameter: int


class ContractionReport(BaseModel):
    constant: int
    radius_bound: int
    line: List[int]
    witnesses: List[BallWitness] = Field(default_factory=list)


class CheckReport(BaseModel):
    """
    Result of one checker run.

    :param check: Checker name (``scp``, ``lipschitz``, ``checkpoints``, ...).
    :type check: str
    :param passed: True iff ``violations`` is empty.
    :type passed: bool
    :param parameters: Constants and bounds the check ran with.
    :type parameters: Dict[str, Any]
    :param violations: Violations with witnesses.
    :type violations: List[Violation]
    :param excluded_pairs: Pairs not judged (near the boundary of the region).
    :type excluded_pairs: List[List[int]]
    """

    check: str
    passed: bool
    parameters: Dict[str, Any] = Field(default_factory=dict)
    violations: List[Violation] = Field(default_factory=list)
    excluded_pairs: List[List[int]] = Field(default_factory=list)
    checked: int = 0


class AngleOfViewReport(BaseModel):
    angle: Distance
    mode: str
    witness: Optional[List[int]] = None


class CrossCheckReport(BaseModel):
    """
    Angle of view A and the SCP check with constants (3A, 0).
    """

    angle_of_view: Distance
    constants: Dict[str, Distance]
    consistent: bool
    violations: List[Violation] = Field(default_factory=list)


class GridReport(BaseModel):
    """
    Verification that interval(v, g²v) in a portion is a 4x4 grid.

    :param is_grid: All grid assertions hold.
    :type is_grid: bool
    :param positions: Grid coordinates of v, gv and g²v.
    :type positions: Dict[str, List[int]]
    :param relative_to_portion: Always True; the statement holds for the enumerated portion.
    :type relative_to_portion: bool
    """

    is_grid: bool
    base_vertex: str
    labels: Dict[str, str]
    positions: Dict[str, List[int]]
    distances: Dict[str, Distance]
    vertex_count: int
    edge_count: int
    square_count: int
    interval_vertices: List[str]
    action_consistent: bool
    portion_vertex_count: int
    portion_square_count: int
    word_length: Optional[int] = None
    generators: List[str] = Field(default_factory=list)
    relative_to_portion: bool = True


class LinkExplorationRow(BaseModel):
    element: str
    image: str
    distance: Distance
    upper_bound: bool = True


class LinkExplorationReport(BaseModel):
    base_vertex: str
    base_node: List[str]
    portion_vertex_count: int
    rows: List[LinkExplorationRow]


class ConstraintEquation(BaseModel):
    component: int
    monomial: str
    coefficient: str


class SummaryStep(BaseModel):
    """
    One step of the successive monomial isolation.

    :param kind: ``solve``, ``normalise``, ``strip units`` or ``power``.
    :type kind: str
    :param raw: Coefficient before substitution.
    :type raw: str
    :param reduced: Coefficient after the substitutions known at this step.
    :type reduced: str
    :param relation: Derived relation (required to vanish).
    :type relation: str
    :param consistent: True when the relation was already known.
    :type consistent: bool
    """

    component: int
    monomial: str
    kind: str
    raw: str
    reduced: str
    relation: str
    consistent: bool = False


class StabilizerReport(BaseModel):
    equations: List[ConstraintEquation]
    steps: List[SummaryStep]
    summary: List[str]
    mirror: List[str]
    conclusion: str
    solution_count: int


class ParameterCheck(BaseModel):
    values: Dict[str, str]
    satisfied: bool
    violated: List[ConstraintEquation] = Field(default_factory=list)


class QCheckRow(BaseModel):
    word: str
    forward_preserves_q: bool
    inverse_preserves_q: bool
    inverse_is_identity: bool


class QCheckReport(BaseModel):
    passed: bool
    rows: List[QCheckRow]
