"""
src.services.tame_complex_service

================================================================================
Finite Portions of the Tame Square Complex
================================================================================

Overview
--------
Builds finite subcomplexes of the square complex on which the tame group
acts, and runs the verifications about the hyperbolic element g on them:

- the combinatorial interval between v = [x1] and g²v is a 4x4 grid of
  squares with gv at its centre
- the stabiliser of a vertex moves a link node by tabulated link distances
- the common stabiliser of the standard square and its g-translate is
  finite (symbolic constraint report)

Responsibilities
----------------
- `standard_square_vertices`, `build_from_elements`, `enumerate_ball`
- `grid_generators`, `verify_grid`
- `partial_link_exploration`, `elementary_link_exploration`
- `common_stabilizer_report`, `portion_to_document`

Key Characteristics
--------------------
- Vertices are merged by orbit equality; elements by forward map
- Every enumeration runs under an explicit `Budget`
- Grid statements hold relative to the enumerated portion and say so
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from src.algebra.polynomial import GroundPoly
from src.config.env import get_app_config
from src.exceptions.custom_exceptions import NotInStabilizer, VerticesMissing
from src.models.complex import PolygonalComplex, edge_key
from src.models.orbit_vertex import OrbitVertex, Type1Vertex, Type2Vertex, Type3Vertex
from src.models.portion import TamePortion
from src.models.tame_element import TameElement
from src.schemas.complex import TamePortionDocument, TameVertexDocument
from src.schemas.reports import GridReport, LinkExplorationReport, LinkExplorationRow, StabilizerReport
from src.services import geometry_service as geo
from src.services import tame_group_service as tame
from src.utils.budget_util import Budget
from src.utils.logger_util import log_info

GRID_SIZE = 4


def standard_square_vertices(t: TameElement) -> Tuple[OrbitVertex, OrbitVertex, OrbitVertex, OrbitVertex]:
    """
    Vertex cycle of the square t·S0: [f1], [f1, f2], [f1, f2, f3, f4], [f1, f3] with (f1, ..., f4) = t⁻¹.

    :param t: Tame element.
    :type t: TameElement
    :return: The four vertices in cyclic order.
    :rtype: Tuple[OrbitVertex, OrbitVertex, OrbitVertex, OrbitVertex]
    """
    f1, f2, f3, f4 = t.inverse.components
    return Type1Vertex(f1), Type2Vertex(f1, f2), Type3Vertex(t.inverse), Type2Vertex(f1, f3)


def build_from_elements(
    elements: Sequence[TameElement],
    word_length: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> TamePortion:
    """
    One square per element, vertices merged by orbit equality.

    :param elements: Tame elements; each contributes the square t·S0.
    :type elements: Sequence[TameElement]
    :param word_length: Word-length bound recorded in the portion.
    :type word_length: Optional[int]
    :param budget: Vertex budget checked after every square.
    :type budget: Optional[Budget]
    :raises DegenerateTuple: Propagated from the orbit constructors.
    :raises BudgetExceeded: If the vertex count passes the budget.
    :return: The portion; squares with the same vertex set are kept once.
    :rtype: TamePortion
    """
    index: Dict[OrbitVertex, int] = {}
    vertices: List[OrbitVertex] = []
    edges = set()
    squares: List[Tuple[int, ...]] = []
    seen_squares = set()
    for t in elements:
        cycle = []
        for vertex in standard_square_vertices(t):
            if vertex not in index:
                index[vertex] = len(vertices)
                vertices.append(vertex)
            cycle.append(index[vertex])
        key = frozenset(cycle)
        if key in seen_squares:
            continue
        seen_squares.add(key)
        squares.append(tuple(cycle))
        edges.update(edge_key(cycle[i], cycle[(i + 1) % 4]) for i in range(4))
        if budget is not None:
            budget.check(len(vertices))

    labels = {i: vertex.render() for i, vertex in enumerate(vertices)}
    complex_ = PolygonalComplex(labels, sorted(edges), squares)
    log_info(
        "Tame portion built",
        function_name="build_from_elements",
        context={"elements": len(elements), "vertices": len(vertices), "squares": len(squares)},
    )
    return TamePortion(complex_, tuple(vertices), tuple(elements), word_length, dict(index))


def enumerate_ball(
    generators: Sequence[TameElement],
    max_word_length: int,
    vertex_cap: Optional[int] = None,
) -> TamePortion:
    """
    Squares of every product of at most ``max_word_length`` generators and their inverses.

    Words are extended on the right breadth-first, in generator order with
    the positive letter first, and deduplicated by forward map.

    :param generators: Tame elements S; the ball uses S ∪ S⁻¹.
    :type generators: Sequence[TameElement]
    :param max_word_length: Longest word; bounded by ``WORD_LENGTH``.
    :type max_word_length: int
    :param vertex_cap: Vertex budget; ``VERTEX_CAP`` by default.
    :type vertex_cap: Optional[int]
    :raises BudgetExceeded: If a bound is passed.
    :return: The portion.
    :rtype: TamePortion
    """
    config = get_app_config()
    Budget("WORD_LENGTH", max(config["WORD_LENGTH"], config["GRID_WORD_LENGTH"])).check(max_word_length)
    budget = Budget("VERTEX_CAP", vertex_cap if vertex_cap is not None else config["VERTEX_CAP"])
    letters: List[TameElement] = []
    for s in generators:
        letters += [s, s.inverted()]

    identity = TameElement.identity()
    elements: List[TameElement] = [identity]
    seen = {identity}
    frontier = [identity]
    for length in range(1, max_word_length + 1):
        next_frontier = []
        for element in frontier:
            for letter in letters:
                product = element * letter
                if product not in seen:
                    seen.add(product)
                    elements.append(product)
                    next_frontier.append(product)
        frontier = next_frontier
        log_info(
            "Word ball layer enumerated",
            function_name="enumerate_ball",
            context={"length": length, "new": len(next_frontier), "total": len(elements)},
        )
    return build_from_elements(elements, word_length=max_word_length, budget=budget)


def grid_generators() -> List[TameElement]:
    """
    g, σ∘e, σ∘τ∘e∘τ, σ and the two corner swaps (e the elementary map with P = x1²).

    Every square of the grid between [x1] and g²[x1] is the square of a
    word of length at most 2 in these.
    """
    e, tau, sigma = tame.elementary_x1_squared(), tame.swap_23(), tame.swap_14()
    return [
        tame.explicit_g(),
        tame.element_from_word([(sigma, 1), (e, 1)]),
        tame.element_from_word([(sigma, 1), (tau, 1), (e, 1), (tau, 1)]),
        tame.element_from_word([(sigma, 1)]),
        tame.element_from_word([(tame.corner_swap_2(), 1)]),
        tame.element_from_word([(tame.corner_swap_3(), 1)]),
    ]


def base_vertex() -> Type1Vertex:
    return Type1Vertex(GroundPoly.variable(0))


def _require(portion: TamePortion, named: Dict[str, OrbitVertex]) -> Dict[str, int]:
    ids = {name: portion.find(vertex) for name, vertex in named.items()}
    missing = {name: named[name].render() for name, found in ids.items() if found is None}
    if missing:
        raise VerticesMissing("Vertices are not in the portion", details={"missing": missing})
    return ids  # type: ignore[return-value]


def verify_grid(
    portion: TamePortion,
    v: Optional[OrbitVertex] = None,
    g: Optional[TameElement] = None,
    generators: Optional[Sequence[TameElement]] = None,
) -> GridReport:
    """
    Check that interval(v, g²v) in the portion is a 4x4 grid with gv at its centre.

    :param portion: The enumerated portion.
    :type portion: TamePortion
    :param v: The base vertex; [x1] by default.
    :type v: Optional[OrbitVertex]
    :param g: The isometry; the explicit g by default.
    :type g: Optional[TameElement]
    :param generators: Generators the portion was enumerated from, recorded in the report.
    :type generators: Optional[Sequence[TameElement]]
    :raises VerticesMissing: If v, gv or g²v is not in the portion.
    :return: The grid report; all statements are relative to the portion. When v and g²v are
        disconnected the interval is empty and the distances are infinite.
    :rtype: GridReport
    """
    v = v or base_vertex()
    g = g or tame.explicit_g()
    gv = tame.act_on_vertex(g, v)
    g2v = tame.act_on_vertex(g, gv)
    ids = _require(portion, {"v": v, "gv": gv, "g2v": g2v})
    c = portion.complex

    distances = {
        "v_gv": geo.distance(c, ids["v"], ids["gv"]),
        "v_g2v": geo.distance(c, ids["v"], ids["g2v"]),
        "gv_g2v": geo.distance(c, ids["gv"], ids["g2v"]),
    }
    # a portion too small to connect v and g²v has an empty interval
    interval = geo.interval(c, ids["v"], ids["g2v"]) if distances["v_g2v"] != math.inf else frozenset()
    subgraph = c.graph.subgraph(interval)
    squares = c.polygons_within(interval)
    grid = nx.grid_2d_graph(GRID_SIZE + 1, GRID_SIZE + 1)

    positions: Dict[str, List[int]] = {}
    if len(interval) == grid.number_of_nodes():
        for mapping in GraphMatcher(subgraph, grid).isomorphisms_iter():
            if mapping[ids["v"]] == (0, 0):
                positions = {name: list(mapping[vid]) for name, vid in ids.items()}
                break

    action_consistent = (
        portion.find(tame.act_on_vertex(g.inverted(), g2v)) == ids["gv"]
        and portion.find(tame.act_on_vertex(g.inverted(), gv)) == ids["v"]
    )
    is_grid = (
        bool(positions)
        and positions["g2v"] == [GRID_SIZE, GRID_SIZE]
        and positions["gv"] == [GRID_SIZE // 2, GRID_SIZE // 2]
        and len(squares) == GRID_SIZE * GRID_SIZE
        and distances["v_g2v"] == 2 * GRID_SIZE
    )
    log_info(
        "Grid verified",
        function_name="verify_grid",
        context={"is_grid": is_grid, "interval": len(interval), "squares": len(squares)},
    )
    return GridReport(
        is_grid=is_grid,
        base_vertex=v.render(),
        labels={name: c.label(vid) for name, vid in ids.items()},
        positions=positions,
        distances=distances,
        vertex_count=len(interval),
        edge_count=subgraph.number_of_edges(),
        square_count=len(squares),
        interval_vertices=sorted(c.label(x) for x in interval),
        action_consistent=action_consistent,
        portion_vertex_count=len(c),
        portion_square_count=portion.square_count,
        word_length=portion.word_length,
        generators=[t.render_word() for t in generators or ()],
    )


def partial_link_exploration(
    portion: TamePortion,
    v: OrbitVertex,
    stabilizer: Sequence[TameElement],
    neighbor: OrbitVertex,
) -> LinkExplorationReport:
    """
    Link distance at ``v`` between the edge (v, neighbor) and its image under each stabiliser element.

    Distances are measured in the link of the portion, so they bound the
    true link distance from above; a missing image gives ``inf``.

    :param portion: The portion.
    :type portion: TamePortion
    :param v: Vertex fixed by every element.
    :type v: OrbitVertex
    :param stabilizer: Elements fixing ``v``.
    :type stabilizer: Sequence[TameElement]
    :param neighbor: Other end of the base edge.
    :type neighbor: OrbitVertex
    :raises NotInStabilizer: If an element moves ``v``.
    :raises VerticesMissing: If ``v`` or ``neighbor`` is not in the portion.
    :return: One row per element.
    :rtype: LinkExplorationReport
    """
    ids = _require(portion, {"v": v, "neighbor": neighbor})
    link = geo.link_graph(portion.complex, ids["v"])
    base = edge_key(ids["v"], ids["neighbor"])
    rows = []
    for h in stabilizer:
        if tame.act_on_vertex(h, v) != v:
            raise NotInStabilizer("Element does not fix the vertex", details={"element": h.render_word(), "vertex": v.render()})
        image = tame.act_on_vertex(h, neighbor)
        image_id = portion.find(image)
        distance = math.inf if image_id is None else link.distance(base, edge_key(ids["v"], image_id))
        rows.append(LinkExplorationRow(element=h.render_word(), image=image.render(), distance=distance))
    return LinkExplorationReport(
        base_vertex=v.render(),
        base_node=[v.render(), neighbor.render()],
        portion_vertex_count=len(portion.complex),
        rows=rows,
    )


def elementary_link_exploration(max_degree: int) -> LinkExplorationReport:
    """
    Explore the link of [x1] under the elementary maps with P = x1^k, 0 <= k < max_degree.

    The portion holds the identity square and the squares of the elements;
    the base node is the edge from [x1] to [x1, x2].
    """
    x1, x2, _, _ = GroundPoly.variables()
    stabilizer = [tame.element_from_word([(tame.elementary(x1**k), 1)]) for k in range(max_degree)]
    portion = build_from_elements([TameElement.identity(), *stabilizer])
    return partial_link_exploration(portion, base_vertex(), [TameElement.identity(), *stabilizer], Type2Vertex(x1, x2))


def common_stabilizer_report() -> StabilizerReport:
    return tame.derive_common_stabilizer_constraints()


def vertex_to_document(vertex_id: int, vertex: OrbitVertex) -> TameVertexDocument:
    if isinstance(vertex, Type3Vertex):
        return TameVertexDocument(
            id=vertex_id,
            type=3,
            components=[p.render() for p in vertex.span_key],
            form=vertex.render_form(),
        )
    return TameVertexDocument(id=vertex_id, type=vertex.kind, components=[p.render() for p in vertex.components])


def portion_to_document(portion: TamePortion) -> TamePortionDocument:
    c = portion.complex
    return TamePortionDocument(
        vertices=[vertex_to_document(i, vertex) for i, vertex in enumerate(portion.vertices)],
        edges=[list(e) for e in c.edges],
        squares=[list(s) for s in c.polygons],
        elements=[t.render_word() for t in portion.elements],
        word_length=portion.word_length,
    )
