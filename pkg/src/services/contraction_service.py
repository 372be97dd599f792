"""
src.services.contraction_service

================================================================================
Contraction Checkers for Finite Complexes
================================================================================

Overview
--------
Exhaustive verifiers for the contraction machinery of isometries of
polygonal complexes, run on finite portions:

- strong-contraction constants of a quasi-line Λ (projection diameters of
  balls disjoint from Λ) and the coarse-Lipschitz projection inequality
- checkpoint systems (über-contraction): every geodesic between points with
  far-apart projections meets every separating checkpoint
- the Strong Concatenation Property (SCP) with constants (A, R)
- the angle of view, and the cross-check "angle of view A implies SCP with
  constants (3A, 0)"
- assembly of a checkpoint system from a vertex where an axis makes a big
  angle, and coarse stabilisers of pairs of vertices

Key Characteristics
--------------------
- No sampling: every quantifier ranges over a finite, explicitly bounded set
- All projections are taken with every choice of projection point
- Violations carry witnesses that re-check with the geometry queries
- Start and end of each check, and violation counts, are logged
"""

import math
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from src.exceptions.custom_exceptions import AngleTooSmall, ComplexError, NotGeodesic
from src.models.checkpoint import CheckpointSystem
from src.models.complex import Edge, PolygonalComplex, edge_key
from src.schemas.common import Violation
from src.schemas.reports import AngleOfViewReport, BallWitness, CheckReport, ContractionReport, CrossCheckReport
from src.services import geometry_service as geo
from src.utils.logger_util import log_info

VertexMap = Mapping[int, int]
Pair = Tuple[int, int]


def _line_region(c: PolygonalComplex, line: FrozenSet[int]) -> List[int]:
    if not line:
        raise ComplexError("The quasi-line must be non-empty")
    for v in line:
        c.require_vertex(v)
    return sorted(set().union(*(comp for comp in c.components if comp & line)))


# ---------------------------------------------------------------------------
# Strong contraction and the coarse-Lipschitz lemma
# ---------------------------------------------------------------------------


def contraction_constant(c: PolygonalComplex, line: Iterable[int], radius_bound: int) -> ContractionReport:
    """
    Largest projection diameter of a ball disjoint from ``line``.

    For a centre x the admissible radii are r <= min(radius_bound, d(x, Λ) - 1);
    the projection diameter grows with r, so only the largest admissible
    ball is measured.

    :param c: The complex.
    :type c: PolygonalComplex
    :param line: The quasi-line Λ.
    :type line: Iterable[int]
    :param radius_bound: Largest radius tested.
    :type radius_bound: int
    :raises ComplexError: If ``line`` is empty or names unknown vertices.
    :return: The constant C and every ball realising it.
    :rtype: ContractionReport
    """
    line = frozenset(line)
    region = _line_region(c, line)
    projections = geo.projection_table(c, line)
    log_info(
        "Contraction constant started",
        function_name="contraction_constant",
        context={"line": len(line), "region": len(region), "radius_bound": radius_bound},
    )
    best = 0
    witnesses: List[BallWitness] = []
    for x in region:
        reach = geo.distance_to_set(c, x, line)
        radius = min(radius_bound, reach - 1)
        if radius < 0:
            continue
        row = c.distances[x]
        image: Set[int] = set()
        for y in region:
            if row.get(y, math.inf) <= radius:
                image |= projections[y]
        diameter = int(geo.set_diameter(c, image))
        witness = BallWitness(center=x, radius=radius, projection=sorted(image), diameter=diameter)
        if diameter > best:
            best, witnesses = diameter, [witness]
        elif diameter == best:
            witnesses.append(witness)
    log_info("Contraction constant finished", function_name="contraction_constant", context={"constant": best})
    return ContractionReport(constant=best, radius_bound=radius_bound, line=sorted(line), witnesses=witnesses)


def check_coarse_lipschitz(c: PolygonalComplex, line: Iterable[int], constant: int) -> CheckReport:
    """
    Check d(π(x), π(y)) <= max(C, 4 d(x, y)) for all pairs and all projection choices.

    :param c: The complex.
    :type c: PolygonalComplex
    :param line: The quasi-line Λ.
    :type line: Iterable[int]
    :param constant: The contraction constant C.
    :type constant: int
    :return: Report listing each failing (x, y, π(x), π(y)).
    :rtype: CheckReport
    """
    line = frozenset(line)
    region = _line_region(c, line)
    projections = geo.projection_table(c, line)
    violations: List[Violation] = []
    checked = 0
    for x, y in combinations(region, 2):
        d_xy = c.distances[x].get(y)
        if d_xy is None:
            continue
        checked += 1
        bound = max(constant, 4 * d_xy)
        for px in sorted(projections[x]):
            row = c.distances[px]
            for py in sorted(projections[y]):
                if row[py] > bound:
                    violations.append(
                        Violation(
                            condition="coarse lipschitz",
                            witness={"x": x, "y": y, "projection_x": px, "projection_y": py},
                            measured={"projection_distance": row[py], "distance": d_xy, "bound": bound},
                        )
                    )
    log_info(
        "Coarse-Lipschitz check finished",
        function_name="check_coarse_lipschitz",
        context={"pairs": checked, "violations": len(violations)},
    )
    return CheckReport(
        check="lipschitz",
        passed=not violations,
        parameters={"C": constant},
        violations=violations,
        checked=checked,
    )


# ---------------------------------------------------------------------------
# Checkpoint systems
# ---------------------------------------------------------------------------


def default_boundary(c: PolygonalComplex, h: VertexMap) -> FrozenSet[int]:
    """Vertices where the partial isometry h or its inverse is undefined."""
    images = set(h.values())
    return frozenset(v for v in c.vertices if v not in h or v not in images)


def _translate_violations(system: CheckpointSystem, h: VertexMap) -> List[Violation]:
    found = []
    for (s, i), (t, j) in zip(zip(system.checkpoints, system.indices), zip(system.checkpoints[1:], system.indices[1:])):
        if j != i + 1 or not all(v in h for v in s):
            continue
        image = frozenset(h[v] for v in s)
        if image != t:
            found.append(
                Violation(
                    condition="checkpoint not a translate",
                    witness={"index": i, "checkpoint": sorted(s), "next": sorted(t)},
                    measured={"image": sorted(image)},
                )
            )
    return found


def check_checkpoint_system(
    c: PolygonalComplex,
    h: VertexMap,
    system: CheckpointSystem,
    test_set: Optional[Iterable[Pair]] = None,
    boundary: Optional[Iterable[int]] = None,
) -> CheckReport:
    """
    Verify the checkpoint condition on every tested pair.

    For a pair (x, y) and every choice of projections π(x), π(y) onto
    Λ = ∪ S_i, each checkpoint whose index lies strictly between the indices
    of π(x) and π(y), and which is at distance >= L from both, must be met
    by every geodesic from x to y. Pairs whose interval touches the boundary
    of the region are excluded and listed.

    :param c: The complex.
    :type c: PolygonalComplex
    :param h: Partial vertex bijection generating the checkpoints.
    :type h: VertexMap
    :param system: The checkpoint system.
    :type system: CheckpointSystem
    :param test_set: Pairs to test; all pairs of the region by default.
    :type test_set: Optional[Iterable[Pair]]
    :param boundary: Region boundary; ``default_boundary(c, h)`` by default.
    :type boundary: Optional[Iterable[int]]
    :return: Report with witness geodesics avoiding a checkpoint.
    :rtype: CheckReport
    """
    line = system.line
    region = _line_region(c, line)
    boundary = default_boundary(c, h) if boundary is None else frozenset(boundary)
    index_of = system.index_map
    projections = geo.projection_table(c, line)
    pairs = sorted(tuple(sorted(p)) for p in test_set) if test_set is not None else list(combinations(region, 2))
    checkpoint_distance: Dict[Tuple[int, int], int] = {}

    def far_enough(position: int, vertex: int) -> bool:
        key = (position, vertex)
        if key not in checkpoint_distance:
            checkpoint_distance[key] = int(geo.distance_to_set(c, vertex, system.checkpoints[position]))
        return checkpoint_distance[key] >= system.error_constant

    violations = _translate_violations(system, h)
    excluded: List[List[int]] = []
    checked = 0
    log_info(
        "Checkpoint check started",
        function_name="check_checkpoint_system",
        context={"pairs": len(pairs), "checkpoints": len(system.checkpoints), "L": system.error_constant},
    )
    for x, y in pairs:
        if x == y or c.distances[x].get(y) is None:
            continue
        dag = geo.geodesic_dag(c, x, y)
        if dag.vertices & boundary:
            excluded.append([x, y])
            continue
        checked += 1
        required: Set[int] = set()
        for px in projections[x]:
            for py in projections[y]:
                lo, hi = sorted((index_of[px], index_of[py]))
                for position, index in enumerate(system.indices):
                    if lo < index < hi and far_enough(position, px) and far_enough(position, py):
                        required.add(position)
        for position in sorted(required):
            witness = dag.path_avoiding(system.checkpoints[position])
            if witness is not None:
                violations.append(
                    Violation(
                        condition="geodesic avoids checkpoint",
                        witness={
                            "x": x,
                            "y": y,
                            "checkpoint_index": system.indices[position],
                            "checkpoint": sorted(system.checkpoints[position]),
                            "geodesic": list(witness),
                        },
                        measured={"distance": dag.distance},
                    )
                )
    log_info(
        "Checkpoint check finished",
        function_name="check_checkpoint_system",
        context={"checked": checked, "excluded": len(excluded), "violations": len(violations)},
    )
    return CheckReport(
        check="checkpoints",
        passed=not violations,
        parameters={"L": system.error_constant, "checkpoints": len(system.checkpoints)},
        violations=violations,
        excluded_pairs=excluded,
        checked=checked,
    )


# ---------------------------------------------------------------------------
# Strong Concatenation Property
# ---------------------------------------------------------------------------


def _reach_through(c: PolygonalComplex, v: int, n: int, length_bound: int) -> List[int]:
    """Vertices a with d(v, a) <= length_bound reached by a geodesic from v starting with the edge (v, n)."""
    row_v, row_n = c.distances[v], c.distances[n]
    return sorted(a for a, d in row_v.items() if 1 <= d <= length_bound and row_n.get(a) == d - 1)


def _geodesic_through(c: PolygonalComplex, v: int, n: int, a: int) -> List[int]:
    tail = next(geo.geodesic_dag(c, n, a).paths())
    return [v, *tail]


def _big_angle_pairs(c: PolygonalComplex, v: int, threshold) -> List[Tuple[int, int, object]]:
    link = geo.link_graph(c, v)
    result = []
    neighbours = sorted(c.graph.adj[v])
    for n1, n2 in combinations(neighbours, 2):
        angle = link.distance(edge_key(v, n1), edge_key(v, n2))
        if angle > threshold:
            result.append((n1, n2, angle))
    return result


def _segments_through(c: PolygonalComplex, v: int, n1: int, n2: int, length_bound: int) -> List[Tuple[int, ...]]:
    """Geodesic segments of length <= length_bound having v as interior vertex with edges (n1, v), (v, n2)."""
    segments = []
    left_ends = _reach_through(c, v, n1, length_bound)
    right_ends = _reach_through(c, v, n2, length_bound)
    for a in left_ends:
        da = c.distances[v][a]
        for b in right_ends:
            db = c.distances[v][b]
            if da + db > length_bound or c.distances[a].get(b) != da + db:
                continue
            for left in geo.geodesic_dag(c, n1, a).paths():
                for right in geo.geodesic_dag(c, n2, b).paths():
                    segments.append(tuple(reversed(left)) + (v,) + right)
    return segments


def check_scp(c: PolygonalComplex, angle_threshold, projection_threshold: int, length_bound: int) -> CheckReport:
    """
    Check the Strong Concatenation Property with constants (A, R).

    Condition 1: if geodesics γ1, γ2 from v leave v along edges at angle > A,
    then γ1 ∪ γ2 is a geodesic, checked as d(a, b) = d(v, a) + d(v, b) for all
    endpoints a, b reachable within ``length_bound``.

    Condition 2: if a geodesic segment γ passes through v with angle > A at
    v, and x, y have projections on γ on opposite sides of v, each at
    distance > R from v, then every geodesic from x to y contains v.
    Segments are bounded by ``length_bound``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param angle_threshold: A (may be ``math.inf``, which makes the check vacuous).
    :param projection_threshold: R.
    :type projection_threshold: int
    :param length_bound: Largest geodesic length explored.
    :type length_bound: int
    :return: Report with one violation per failing witness.
    :rtype: CheckReport
    """
    log_info(
        "SCP check started",
        function_name="check_scp",
        context={"A": angle_threshold, "R": projection_threshold, "length_bound": length_bound},
    )
    violations: List[Violation] = []
    through_cache: Dict[Tuple[int, int, int], bool] = {}

    def all_geodesics_through(x: int, y: int, v: int) -> bool:
        key = (x, y, v)
        if key not in through_cache:
            if c.distances[x].get(v, math.inf) + c.distances[v].get(y, math.inf) != c.distances[x].get(y):
                through_cache[key] = False
            else:
                through_cache[key] = v in geo.geodesic_dag(c, x, y).forced
        return through_cache[key]

    checked = 0
    for v in c.vertices:
        for n1, n2, angle in _big_angle_pairs(c, v, angle_threshold):
            checked += 1
            # condition 1
            ends1 = _reach_through(c, v, n1, length_bound)
            ends2 = _reach_through(c, v, n2, length_bound)
            for a in ends1:
                for b in ends2:
                    expected = c.distances[v][a] + c.distances[v][b]
                    actual = c.distances[a].get(b, math.inf)
                    if actual != expected:
                        violations.append(
                            Violation(
                                condition="concatenation not geodesic",
                                witness={
                                    "vertex": v,
                                    "first": _geodesic_through(c, v, n1, a),
                                    "second": _geodesic_through(c, v, n2, b),
                                },
                                measured={"angle": angle, "distance": actual, "concatenated_length": expected},
                            )
                        )
            # condition 2
            for segment in _segments_through(c, v, n1, n2, length_bound):
                centre = segment.index(v)
                left = {z for z in segment[:centre] if c.distances[v][z] > projection_threshold}
                right = {z for z in segment[centre + 1 :] if c.distances[v][z] > projection_threshold}
                if not left or not right:
                    continue
                table = geo.projection_table(c, segment)
                xs = [x for x, p in table.items() if p & left]
                ys = [y for y, p in table.items() if p & right]
                for x in xs:
                    for y in ys:
                        if x != y and not all_geodesics_through(x, y, v):
                            dag = geo.geodesic_dag(c, x, y)
                            avoiding = dag.path_avoiding({v})
                            violations.append(
                                Violation(
                                    condition="geodesic avoids big-angle vertex",
                                    witness={
                                        "vertex": v,
                                        "segment": list(segment),
                                        "x": x,
                                        "y": y,
                                        "geodesic": list(avoiding) if avoiding else [],
                                    },
                                    measured={"angle": angle},
                                )
                            )
    log_info("SCP check finished", function_name="check_scp", context={"violations": len(violations)})
    return CheckReport(
        check="scp",
        passed=not violations,
        parameters={"A": angle_threshold, "R": projection_threshold, "length_bound": length_bound},
        violations=violations,
        checked=checked,
    )


# ---------------------------------------------------------------------------
# Angle of view
# ---------------------------------------------------------------------------


def measure_angle_of_view(c: PolygonalComplex, mode: str = "min") -> AngleOfViewReport:
    """
    Largest angle ∠_z(x, y) over vertices z lying on no geodesic from x to y.

    ``mode`` selects how ∠_z(x, y) is read over geodesic pairs: ``"min"``
    (the definition of the angle between vertices) or ``"max"``. Infinite
    angles propagate.

    :param c: A connected complex.
    :type c: PolygonalComplex
    :param mode: ``"min"`` or ``"max"``.
    :type mode: str
    :raises ComplexError: If the complex is disconnected.
    :return: The angle of view with the first triple (x, y, z) realising it.
    :rtype: AngleOfViewReport
    """
    if not c.is_connected():
        raise ComplexError("Angle of view needs a connected complex")
    vertices = c.vertices
    starts = {(z, x): geo.first_edges(c, z, x) for z in vertices for x in vertices}
    best = 0
    witness: Optional[List[int]] = None
    for x, y in combinations(vertices, 2):
        on_interval = geo.interval(c, x, y)
        for z in vertices:
            if z in on_interval:
                continue
            link = geo.link_graph(c, z)
            values = [link.distance(a, b) for a in starts[(z, x)] for b in starts[(z, y)]]
            angle = min(values) if mode == "min" else max(values)
            if angle > best or witness is None:
                best, witness = angle, [x, y, z]
                if best == math.inf:
                    return AngleOfViewReport(angle=best, mode=mode, witness=witness)
    return AngleOfViewReport(angle=best, mode=mode, witness=witness)


def cross_check_aov_scp(c: PolygonalComplex, length_bound: int) -> CrossCheckReport:
    """
    Measure the angle of view A (maximum over geodesic pairs) and check SCP with (3A, 0).

    :return: Report; ``consistent`` is False only when SCP(3A, 0) fails.
    :rtype: CrossCheckReport
    """
    view = measure_angle_of_view(c, mode="max")
    threshold = 3 * view.angle
    report = check_scp(c, threshold, 0, length_bound)
    return CrossCheckReport(
        angle_of_view=view.angle,
        constants={"A": threshold, "R": 0},
        consistent=report.passed,
        violations=report.violations,
    )


# ---------------------------------------------------------------------------
# Local criterion and coarse stabilisers
# ---------------------------------------------------------------------------


def assemble_checkpoints_from_big_angle(
    c: PolygonalComplex,
    axis: Sequence[int],
    h: VertexMap,
    v: int,
    threshold,
    error_constant: int = 0,
    test_set: Optional[Iterable[Pair]] = None,
) -> Tuple[CheckpointSystem, CheckReport]:
    """
    Build the checkpoints (h^i v) from a vertex where the axis turns by more than ``threshold``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param axis: A geodesic through ``v``, invariant under h inside the region.
    :type axis: Sequence[int]
    :param h: Partial vertex bijection.
    :type h: VertexMap
    :param v: Interior vertex of the axis.
    :type v: int
    :param threshold: Angle threshold; the angle at ``v`` must exceed it.
    :param error_constant: The constant L of the system.
    :type error_constant: int
    :param test_set: Pairs to test; all pairs by default.
    :type test_set: Optional[Iterable[Pair]]
    :raises NotGeodesic: If ``axis`` is not a geodesic with ``v`` in its interior.
    :raises AngleTooSmall: If the angle of the axis at ``v`` is at most ``threshold``.
    :return: The system and the result of checking it.
    :rtype: Tuple[CheckpointSystem, CheckReport]
    """
    axis = list(axis)
    if not geo.is_geodesic(c, axis) or v not in axis[1:-1]:
        raise NotGeodesic("Axis must be a geodesic through the vertex", details={"vertex": v, "axis": axis})
    position = axis.index(v)
    angle = geo.corner_angle(c, v, (axis[position - 1], v), (v, axis[position + 1]))
    if not angle > threshold:
        raise AngleTooSmall(
            "Axis angle does not exceed the threshold",
            details={"vertex": v, "angle": angle, "threshold": threshold},
        )
    system = CheckpointSystem.from_translates(h, {v}, len(c), len(c), error_constant)
    return system, check_checkpoint_system(c, h, system, test_set)


def coarse_stabilizer(
    c: PolygonalComplex, isometries: Sequence[VertexMap], x: int, y: int, radius: int
) -> List[VertexMap]:
    """
    Isometries moving both ``x`` and ``y`` by at most ``radius``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param isometries: Vertex bijections preserving the complex.
    :type isometries: Sequence[VertexMap]
    :param x: First vertex.
    :type x: int
    :param y: Second vertex.
    :type y: int
    :param radius: The radius r.
    :type radius: int
    :return: The sublist, in input order.
    :rtype: List[VertexMap]
    """
    return [
        phi
        for phi in isometries
        if geo.distance(c, x, phi[x]) <= radius and geo.distance(c, y, phi[y]) <= radius
    ]
