"""
src.models.complex

================================================================================
Finite 2-Dimensional Polygonal Complexes
================================================================================

Overview
--------
`PolygonalComplex` holds vertices (integer ids with opaque labels), edges
(unordered vertex pairs) and polygons (cyclic vertex sequences). The object
is immutable once built. It keeps the raw input so that `validate` can
report malformed data instead of failing on construction, and derives from
it the networkx 1-skeleton, the polygon corners at every vertex and a lazily
computed all-pairs distance table shared by every query.

Key Characteristics
-------------------
- 1-skeleton as a frozen `networkx.Graph`
- Corners indexed per vertex: the link of a vertex is built from them
- Distances cached once per complex (BFS from every vertex)
"""

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

import networkx as nx

from src.exceptions.custom_exceptions import ComplexError

Edge = Tuple[int, int]
Corner = Tuple[Edge, Edge]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class PolygonalComplex:
    """
    Finite polygonal complex of dimension at most 2.

    :param vertices: Mapping from vertex id to label, or an iterable of ids
        (labels then default to ``str(id)``).
    :type vertices: Union[Mapping[int, str], Iterable[int]]
    :param edges: Unordered vertex pairs.
    :type edges: Iterable[Sequence[int]]
    :param polygons: Cyclic vertex sequences.
    :type polygons: Iterable[Sequence[int]]
    """

    def __init__(
        self,
        vertices: Union[Mapping[int, str], Iterable[int]],
        edges: Iterable[Sequence[int]] = (),
        polygons: Iterable[Sequence[int]] = (),
    ):
        if isinstance(vertices, Mapping):
            labels = {int(v): str(label) for v, label in vertices.items()}
        else:
            labels = {int(v): str(v) for v in vertices}
        self._labels: Dict[int, str] = labels
        self._raw_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in e) for e in edges)
        self._polygons: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in p) for p in polygons)

        graph = nx.Graph()
        graph.add_nodes_from(sorted(labels))
        for e in self._raw_edges:
            if len(e) == 2 and e[0] != e[1] and e[0] in labels and e[1] in labels:
                graph.add_edge(e[0], e[1])
        self._graph = nx.freeze(graph)
        self.memo: Dict[object, object] = {}

    # ------------------------------------------------------------------
    # raw data
    # ------------------------------------------------------------------
    @property
    def labels(self) -> Dict[int, str]:
        return dict(self._labels)

    @property
    def vertices(self) -> List[int]:
        return sorted(self._labels)

    @property
    def raw_edges(self) -> Tuple[Tuple[int, ...], ...]:
        return self._raw_edges

    @property
    def edges(self) -> List[Edge]:
        return sorted(edge_key(u, v) for u, v in self._graph.edges())

    @property
    def polygons(self) -> Tuple[Tuple[int, ...], ...]:
        return self._polygons

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    def label(self, v: int) -> str:
        self.require_vertex(v)
        return self._labels[v]

    def vertex_id(self, label: str) -> int:
        """
        Look a vertex up by label.

        :raises ComplexError: If no vertex carries the label.
        """
        for v, text in self._labels.items():
            if text == label:
                return v
        raise ComplexError("Unknown vertex label", details={"label": label})

    def require_vertex(self, v: int) -> None:
        if v not in self._labels:
            raise ComplexError("Vertex not in complex", details={"vertex": v})

    def has_edge(self, u: int, v: int) -> bool:
        return self._graph.has_edge(u, v)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return (
            f"PolygonalComplex(vertices={len(self._labels)}, "
            f"edges={self._graph.number_of_edges()}, polygons={len(self._polygons)})"
        )

    # ------------------------------------------------------------------
    # derived structure
    # ------------------------------------------------------------------
    @cached_property
    def corners(self) -> Dict[int, List[Corner]]:
        """Polygon corners per vertex, one entry per (polygon, position)."""
        result: Dict[int, List[Corner]] = {v: [] for v in self._labels}
        for poly in self._polygons:
            k = len(poly)
            if k < 3:
                continue
            for i, v in enumerate(poly):
                if v not in result:
                    continue
                prev, nxt = poly[i - 1], poly[(i + 1) % k]
                result[v].append((edge_key(prev, v), edge_key(v, nxt)))
        return result

    def incident_edges(self, v: int) -> List[Edge]:
        self.require_vertex(v)
        return sorted(edge_key(v, w) for w in self._graph.neighbors(v))

    @cached_property
    def distances(self) -> Dict[int, Dict[int, int]]:
        return {v: dict(lengths) for v, lengths in nx.all_pairs_shortest_path_length(self._graph)}

    @cached_property
    def components(self) -> List[FrozenSet[int]]:
        return sorted((frozenset(c) for c in nx.connected_components(self._graph)), key=min)

    def is_connected(self) -> bool:
        return len(self._labels) > 0 and nx.is_connected(self._graph)

    def polygon_edges(self, poly: Sequence[int]) -> List[Edge]:
        return [edge_key(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]

    def polygons_within(self, vertex_set: Iterable[int]) -> List[Tuple[int, ...]]:
        """Polygons all of whose vertices lie in ``vertex_set``, deduplicated by vertex set."""
        keep = set(vertex_set)
        seen = set()
        result = []
        for poly in self._polygons:
            key = frozenset(poly)
            if key <= keep and key not in seen:
                seen.add(key)
                result.append(poly)
        return result

