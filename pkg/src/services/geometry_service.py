"""
src.services.geometry_service

================================================================================
Combinatorial Geometry of Polygonal Complexes
================================================================================

Overview
--------
Queries on the 1-skeleton metric of a finite polygonal complex: structural
validation, distances, geodesic DAGs and intervals, link graphs, angles and
closest-point projections.

Responsibilities
----------------
- `validate`: structured report of every malformed edge or polygon
- `distance`, `geodesic_dag`, `interval`
- `link_graph`, `corner_angle`, `path_angle`, `vertex_angle`
- `first_edges`: first edges of all geodesics from one vertex to another
- `closest_point_projection` and `distance_to_set`

Key Characteristics
--------------------
- All distances come from the complex's cached all-pairs BFS table
- Angles are link-graph distances; ``math.inf`` when the nodes are in
  different link components
- Link graphs are cached per complex in ``complex.memo``
"""

import math
from typing import Iterable, List, Sequence, Set, Union

from src.exceptions.custom_exceptions import ComplexError, EdgeNotIncident, NoPath, NotGeodesic
from src.models.complex import Edge, PolygonalComplex, edge_key
from src.models.dag import GeodesicDag
from src.models.link import INFINITE_ANGLE, Angle, LinkGraph
from src.schemas.common import Violation
from src.schemas.reports import ValidationReport
from src.utils.logger_util import log_info

Distance = Union[int, float]


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(c: PolygonalComplex) -> ValidationReport:
    """
    Check every structural invariant of a complex without raising.

    Reported conditions: ``malformed edge``, ``edge endpoint missing``,
    ``loop edge``, ``duplicate edge``, ``polygon too short``, ``polygon
    vertex missing``, ``polygon not simple`` and ``polygon boundary edge
    absent``.

    :param c: The complex.
    :type c: PolygonalComplex
    :return: The report; ``valid`` is True iff there are no violations.
    :rtype: ValidationReport
    """
    violations: List[Violation] = []
    labels = c.labels
    seen: Set[Edge] = set()

    for raw in c.raw_edges:
        if len(raw) != 2:
            violations.append(Violation(condition="malformed edge", witness={"edge": list(raw)}))
            continue
        u, v = raw
        missing = [x for x in (u, v) if x not in labels]
        if missing:
            violations.append(
                Violation(condition="edge endpoint missing", witness={"edge": [u, v], "vertices": missing})
            )
            continue
        if u == v:
            violations.append(Violation(condition="loop edge", witness={"edge": [u, v]}))
            continue
        key = edge_key(u, v)
        if key in seen:
            violations.append(Violation(condition="duplicate edge", witness={"edge": list(key)}))
        seen.add(key)

    for index, poly in enumerate(c.polygons):
        witness = {"polygon": index, "cycle": list(poly)}
        if len(poly) < 3:
            violations.append(Violation(condition="polygon too short", witness=witness))
            continue
        missing = sorted({x for x in poly if x not in labels})
        if missing:
            violations.append(
                Violation(condition="polygon vertex missing", witness={**witness, "vertices": missing})
            )
            continue
        if len(set(poly)) != len(poly):
            violations.append(Violation(condition="polygon not simple", witness=witness))
        for e in c.polygon_edges(poly):
            if e not in seen:
                violations.append(
                    Violation(condition="polygon boundary edge absent", witness={**witness, "edge": list(e)})
                )

    components = len(c.components)
    report = ValidationReport(
        valid=not violations,
        connected=components == 1,
        component_count=components,
        vertex_count=len(labels),
        edge_count=len(seen),
        polygon_count=len(c.polygons),
        violations=violations,
    )
    log_info(
        "Complex validated",
        function_name="validate",
        context={"vertices": report.vertex_count, "violations": len(violations)},
    )
    return report


# ---------------------------------------------------------------------------
# Distances and geodesics
# ---------------------------------------------------------------------------


def distance(c: PolygonalComplex, u: int, v: int) -> Distance:
    """
    1-skeleton distance; ``math.inf`` across components.

    :raises ComplexError: If a vertex is unknown.
    """
    c.require_vertex(u)
    c.require_vertex(v)
    return c.distances[u].get(v, math.inf)


def geodesic_dag(c: PolygonalComplex, u: int, v: int) -> GeodesicDag:
    """
    All geodesics from ``u`` to ``v``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param u: Source vertex.
    :type u: int
    :param v: Target vertex.
    :type v: int
    :raises NoPath: If ``u`` and ``v`` lie in different components.
    :return: The geodesic DAG.
    :rtype: GeodesicDag
    """
    if distance(c, u, v) == math.inf:
        raise NoPath("Vertices lie in different components", details={"source": u, "target": v})
    return GeodesicDag.from_distances(c.graph.adj, c.distances[u], c.distances[v], u, v)


def interval(c: PolygonalComplex, u: int, v: int) -> frozenset:
    """Vertices lying on at least one geodesic from ``u`` to ``v``."""
    if distance(c, u, v) == math.inf:
        raise NoPath("Vertices lie in different components", details={"source": u, "target": v})
    total = c.distances[u][v]
    from_u, from_v = c.distances[u], c.distances[v]
    return frozenset(z for z, d in from_u.items() if from_v.get(z, -1) == total - d)


def first_edges(c: PolygonalComplex, z: int, x: int) -> List[Edge]:
    """
    First edges at ``z`` of the geodesics from ``z`` to ``x``.

    Empty when ``z == x``.

    :raises NoPath: If ``x`` is unreachable from ``z``.
    """
    d = distance(c, z, x)
    if d == math.inf:
        raise NoPath("Vertices lie in different components", details={"source": z, "target": x})
    to_x = c.distances[x]
    return sorted(edge_key(z, w) for w in c.graph.adj[z] if to_x.get(w, -1) == d - 1)


def is_geodesic(c: PolygonalComplex, path: Sequence[int]) -> bool:
    if len(path) < 2 or any(not c.graph.has_node(v) for v in path):
        return False
    if not all(c.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    return c.distances[path[0]].get(path[-1], -1) == len(path) - 1


# ---------------------------------------------------------------------------
# Links and angles
# ---------------------------------------------------------------------------


def link_graph(c: PolygonalComplex, v: int) -> LinkGraph:
    key = ("link", v)
    if key not in c.memo:
        c.memo[key] = LinkGraph.of(c, v)
    return c.memo[key]  # type: ignore[return-value]


def _incident(c: PolygonalComplex, v: int, e: Sequence[int]) -> Edge:
    if len(e) != 2 or v not in e or not c.has_edge(e[0], e[1]):
        raise EdgeNotIncident("Edge is not incident to the vertex", details={"vertex": v, "edge": list(e)})
    return edge_key(e[0], e[1])


def corner_angle(c: PolygonalComplex, v: int, e1: Sequence[int], e2: Sequence[int]) -> Angle:
    """
    Angle at ``v`` between two incident edges: their distance in the link of ``v``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param v: Base vertex.
    :type v: int
    :param e1: First edge (vertex pair, any order).
    :type e1: Sequence[int]
    :param e2: Second edge.
    :type e2: Sequence[int]
    :raises EdgeNotIncident: If an edge does not exist or does not contain ``v``.
    :return: Link distance, ``math.inf`` if disconnected in the link.
    :rtype: Angle
    """
    c.require_vertex(v)
    a, b = _incident(c, v, e1), _incident(c, v, e2)
    return link_graph(c, v).distance(a, b)


def path_angle(c: PolygonalComplex, v: int, path1: Sequence[int], path2: Sequence[int]) -> Angle:
    """
    Angle at ``v`` between two geodesics starting at ``v``, read off their first edges.

    :raises NotGeodesic: If a path does not start at ``v`` or is not a geodesic.
    """
    for path in (path1, path2):
        if not path or path[0] != v or not is_geodesic(c, path):
            raise NotGeodesic("Path is not a geodesic starting at the vertex", details={"vertex": v, "path": list(path)})
    return corner_angle(c, v, (path1[0], path1[1]), (path2[0], path2[1]))


def vertex_angle(c: PolygonalComplex, v: int, w: int, w2: int, mode: str = "min") -> Angle:
    """
    Angle at ``v`` between ``w`` and ``w2`` over all pairs of geodesics.

    With ``mode="min"`` (the definition) the smallest corner angle between a
    first edge toward ``w`` and one toward ``w2`` is returned; ``mode="max"``
    returns the largest. If ``v`` equals either vertex there are no first
    edges and the angle is 0.

    :param mode: ``"min"`` or ``"max"``.
    :type mode: str
    :raises NoPath: If ``w`` or ``w2`` is not in the component of ``v``.
    :return: The angle.
    :rtype: Angle
    """
    if mode not in ("min", "max"):
        raise ComplexError("Unknown angle mode", details={"mode": mode})
    starts1, starts2 = first_edges(c, v, w), first_edges(c, v, w2)
    if not starts1 or not starts2:
        return 0
    link = link_graph(c, v)
    values = [link.distance(a, b) for a in starts1 for b in starts2]
    return min(values) if mode == "min" else max(values)


# ---------------------------------------------------------------------------
# Projections
# ---------------------------------------------------------------------------


def distance_to_set(c: PolygonalComplex, x: int, vertices: Iterable[int]) -> Distance:
    row = c.distances[x]
    return min((row.get(y, math.inf) for y in vertices), default=math.inf)


def closest_point_projection(c: PolygonalComplex, x: int, line: Iterable[int]) -> frozenset:
    """
    Vertices of ``line`` at minimal distance from ``x``.

    :param c: The complex.
    :type c: PolygonalComplex
    :param x: The projected vertex.
    :type x: int
    :param line: Non-empty vertex set (the quasi-line Λ).
    :type line: Iterable[int]
    :raises ComplexError: If ``line`` is empty or names unknown vertices.
    :raises NoPath: If no vertex of ``line`` is in the component of ``x``.
    :return: The projection.
    :rtype: frozenset
    """
    line = frozenset(line)
    if not line:
        raise ComplexError("Cannot project onto an empty set")
    c.require_vertex(x)
    for y in line:
        c.require_vertex(y)
    best = distance_to_set(c, x, line)
    if best == math.inf:
        raise NoPath("Set lies in another component", details={"vertex": x})
    row = c.distances[x]
    return frozenset(y for y in line if row.get(y) == best)


def projection_table(c: PolygonalComplex, line: Iterable[int]) -> dict:
    """Projection of every vertex of the line's components, cached per line."""
    line = frozenset(line)
    key = ("projection", line)
    if key not in c.memo:
        reachable = set().union(*(comp for comp in c.components if comp & line))
        c.memo[key] = {x: closest_point_projection(c, x, line) for x in sorted(reachable)}
    return c.memo[key]  # type: ignore[return-value]


def set_diameter(c: PolygonalComplex, vertices: Iterable[int]) -> Distance:
    vertices = list(vertices)
    best: Distance = 0
    for i, a in enumerate(vertices):
        row = c.distances[a]
        for b in vertices[i + 1 :]:
            best = max(best, row.get(b, math.inf))
    return best


__all__ = [
    "INFINITE_ANGLE",
    "closest_point_projection",
    "corner_angle",
    "distance",
    "distance_to_set",
    "first_edges",
    "geodesic_dag",
    "interval",
    "is_geodesic",
    "link_graph",
    "path_angle",
    "projection_table",
    "set_diameter",
    "validate",
    "vertex_angle",
]
