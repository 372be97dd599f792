"""
src.models.link

================================================================================
Link Graphs
================================================================================

The link of a vertex v: one node per edge at v, one arc (of length 1) per
polygon corner at v. Angles are shortest-path distances in this graph, and
infinite when the two nodes lie in different components.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple, Union

import networkx as nx

from src.models.complex import Corner, Edge, PolygonalComplex

Angle = Union[int, float]
INFINITE_ANGLE: float = math.inf


@dataclass(frozen=True)
class LinkGraph:
    base: int
    nodes: Tuple[Edge, ...]
    arcs: Tuple[Corner, ...]

    @classmethod
    def of(cls, complex_: PolygonalComplex, v: int) -> "LinkGraph":
        nodes = tuple(complex_.incident_edges(v))
        present = set(nodes)
        arcs = tuple(c for c in complex_.corners[v] if c[0] in present and c[1] in present)
        return cls(base=v, nodes=nodes, arcs=arcs)

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((a, b) for a, b in self.arcs if a != b)
        return g

    def distance(self, e1: Edge, e2: Edge) -> Angle:
        if e1 == e2:
            return 0
        return self.distance_table[e1].get(e2, INFINITE_ANGLE)

    @cached_property
    def distance_table(self) -> Dict[Edge, Dict[Edge, int]]:
        return {e: dict(lengths) for e, lengths in nx.all_pairs_shortest_path_length(self.graph)}
