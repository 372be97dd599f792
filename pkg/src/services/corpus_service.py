"""
src.services.corpus_service

================================================================================
Desk-Scale Complex Corpus
================================================================================

Overview
--------
Builders for the small complexes the checkers are exercised on, together
with the isometries acting on them:

- trees: paths and seeded random trees
- portions of ℤ² with filled squares, and ladders
- two squares glued along an edge or at a vertex, chains of squares glued
  at opposite corners
- a single triangle and a triangulated hexagon (wheel)

Grid vertices are labelled ``"(i,j)"``; all other vertices by their id.
Isometries are returned as vertex maps; a shift is a partial map defined
where its image stays inside the portion.
"""

import random
from typing import Dict, List, Tuple

from src.exceptions.custom_exceptions import InputError
from src.models.complex import PolygonalComplex

VertexMap = Dict[int, int]


def _require_positive(**sizes: int) -> None:
    bad = {name: value for name, value in sizes.items() if value < 1}
    if bad:
        raise InputError("Corpus sizes must be positive", details=bad)


def path_graph(n: int) -> PolygonalComplex:
    _require_positive(n=n)
    return PolygonalComplex(range(n), [(i, i + 1) for i in range(n - 1)])


def path_shift(n: int, step: int = 1) -> VertexMap:
    return {i: i + step for i in range(n) if 0 <= i + step < n}


def random_tree(n: int, seed: int = 0) -> PolygonalComplex:
    """
    Random recursive tree: vertex i > 0 is attached to a uniform earlier vertex.

    :param n: Number of vertices.
    :type n: int
    :param seed: Seed of the generator; equal seeds give equal trees.
    :type seed: int
    :return: The tree.
    :rtype: PolygonalComplex
    """
    _require_positive(n=n)
    rng = random.Random(seed)
    return PolygonalComplex(range(n), [(rng.randrange(i), i) for i in range(1, n)])


def balanced_tree(branching: int, height: int) -> PolygonalComplex:
    """Rooted tree with root 0 and children b*i + 1, ..., b*i + b of vertex i."""
    _require_positive(branching=branching, height=height)
    n = sum(branching**k for k in range(height + 1))
    return PolygonalComplex(range(n), [((i - 1) // branching, i) for i in range(1, n)])


# ---------------------------------------------------------------------------
# Square complexes
# ---------------------------------------------------------------------------


def grid_label(i: int, j: int) -> str:
    return f"({i},{j})"


def grid(width: int, height: int, origin: Tuple[int, int] = (0, 0)) -> PolygonalComplex:
    """
    The portion [ox, ox + width) x [oy, oy + height) of ℤ², every unit square filled.

    :param width: Vertices per row.
    :type width: int
    :param height: Vertices per column.
    :type height: int
    :param origin: Coordinates of the lower-left vertex.
    :type origin: Tuple[int, int]
    :return: The grid; vertex (i, j) has id (i - ox) * height + (j - oy).
    :rtype: PolygonalComplex
    """
    _require_positive(width=width, height=height)
    ox, oy = origin

    def vid(a: int, b: int) -> int:
        return a * height + b

    labels = {vid(a, b): grid_label(ox + a, oy + b) for a in range(width) for b in range(height)}
    edges = [(vid(a, b), vid(a + 1, b)) for a in range(width - 1) for b in range(height)]
    edges += [(vid(a, b), vid(a, b + 1)) for a in range(width) for b in range(height - 1)]
    squares = [
        (vid(a, b), vid(a + 1, b), vid(a + 1, b + 1), vid(a, b + 1))
        for a in range(width - 1)
        for b in range(height - 1)
    ]
    return PolygonalComplex(labels, edges, squares)


def ladder(length: int) -> PolygonalComplex:
    return grid(length, 2)


def grid_shift(c: PolygonalComplex, dx: int, dy: int) -> VertexMap:
    """Translation by (dx, dy) of a grid built by `grid`, restricted to where it is defined."""
    by_label = {label: v for v, label in c.labels.items()}
    shift = {}
    for v, label in c.labels.items():
        i, j = (int(x) for x in label.strip("()").split(","))
        target = by_label.get(grid_label(i + dx, j + dy))
        if target is not None:
            shift[v] = target
    return shift


def grid_symmetries(c: PolygonalComplex) -> List[VertexMap]:
    """
    Dihedral symmetries of a grid built by `grid` (8 for a square grid, 4 otherwise).

    The identity comes first.
    """
    coords = {v: tuple(int(x) for x in label.strip("()").split(",")) for v, label in c.labels.items()}
    xs = [p[0] for p in coords.values()]
    ys = [p[1] for p in coords.values()]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    by_point = {p: v for v, p in coords.items()}
    maps = [
        lambda i, j: (i, j),
        lambda i, j: (lo_x + hi_x - i, j),
        lambda i, j: (i, lo_y + hi_y - j),
        lambda i, j: (lo_x + hi_x - i, lo_y + hi_y - j),
    ]
    if hi_x - lo_x == hi_y - lo_y:
        maps += [
            lambda i, j: (lo_x + j - lo_y, lo_y + i - lo_x),
            lambda i, j: (hi_x - (j - lo_y), lo_y + i - lo_x),
            lambda i, j: (lo_x + j - lo_y, hi_y - (i - lo_x)),
            lambda i, j: (hi_x - (j - lo_y), hi_y - (i - lo_x)),
        ]
    return [{v: by_point[f(*p)] for v, p in coords.items()} for f in maps]


def glued_squares_edge() -> PolygonalComplex:
    """Two squares sharing the edge (1, 4)."""
    edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]
    return PolygonalComplex(range(6), edges, [(0, 1, 4, 3), (1, 2, 5, 4)])


def glued_squares_vertex() -> PolygonalComplex:
    """Two squares sharing only the vertex 2."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 2)]
    return PolygonalComplex(range(7), edges, [(0, 1, 2, 3), (2, 4, 5, 6)])


def square_chain(n: int) -> PolygonalComplex:
    """
    ``n`` squares glued at opposite corners.

    Square k has cycle (3k, 3k + 1, 3k + 3, 3k + 2); the corners 3k are cut
    vertices and 0, 1, 3, 4, ..., 3n is a geodesic axis.
    """
    _require_positive(n=n)
    edges, squares = [], []
    for k in range(n):
        c, a, b, nxt = 3 * k, 3 * k + 1, 3 * k + 2, 3 * k + 3
        edges += [(c, a), (a, nxt), (nxt, b), (b, c)]
        squares.append((c, a, nxt, b))
    return PolygonalComplex(range(3 * n + 1), edges, squares)


def square_chain_axis(n: int) -> List[int]:
    axis = []
    for k in range(n):
        axis += [3 * k, 3 * k + 1]
    return axis + [3 * n]


def square_chain_shift(n: int) -> VertexMap:
    return {v: v + 3 for v in range(3 * n + 1) if v + 3 <= 3 * n}


# ---------------------------------------------------------------------------
# Triangle complexes
# ---------------------------------------------------------------------------


def single_triangle() -> PolygonalComplex:
    return PolygonalComplex(range(3), [(0, 1), (1, 2), (0, 2)], [(0, 1, 2)])


def wheel(rim: int = 6) -> PolygonalComplex:
    """
    Hub 0 coned over a rim cycle 1..rim, one triangle per rim edge.

    :param rim: Number of rim vertices (at least 3).
    :type rim: int
    :raises InputError: If ``rim`` is below 3.
    :return: The wheel.
    :rtype: PolygonalComplex
    """
    if rim < 3:
        raise InputError("A wheel needs at least 3 rim vertices", details={"rim": rim})
    spokes = [(0, i) for i in range(1, rim + 1)]
    cycle = [(i, i % rim + 1) for i in range(1, rim + 1)]
    triangles = [(0, i, i % rim + 1) for i in range(1, rim + 1)]
    return PolygonalComplex(range(rim + 1), spokes + cycle, triangles)


def default_corpus() -> Dict[str, PolygonalComplex]:
    """The named complexes bundled as fixtures."""
    return {
        "single_square": grid(2, 2),
        "grid7x7": grid(7, 7, origin=(-3, -3)),
        "ladder": ladder(6),
        "tree": balanced_tree(2, 3),
        "glued_edge": glued_squares_edge(),
        "glued_vertex": glued_squares_vertex(),
        "triangle": single_triangle(),
        "wheel": wheel(6),
        "square_chain": square_chain(4),
    }
