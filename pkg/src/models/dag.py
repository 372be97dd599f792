"""
src.models.dag

================================================================================
Geodesic DAGs and Combinatorial Intervals
================================================================================

Overview
--------
A `GeodesicDag` stores every combinatorial geodesic between a source and a
target of a 1-skeleton at once: for each vertex of the interval, the set of
neighbours one step closer to the target. Every source-to-target path of
the DAG has length ``distance``, and every geodesic of the graph is such a
path.

Responsibilities
----------------
- Interval membership and layers (vertices grouped by distance from source)
- First edges at the source (the only data angles depend on)
- Geodesic counting by dynamic programming and small-case enumeration
- Reachability avoiding a vertex set (used by the checkpoint checker)
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from src.models.complex import Edge, edge_key


@dataclass(frozen=True)
class GeodesicDag:
    """
    All geodesics from ``source`` to ``target``.

    :param source: Start vertex.
    :type source: int
    :param target: End vertex.
    :type target: int
    :param distance: Length of every geodesic.
    :type distance: int
    :param successors: Successor sets toward the target, one per interval vertex.
    :type successors: Mapping[int, FrozenSet[int]]
    :param depth: Distance from the source, one per interval vertex.
    :type depth: Mapping[int, int]
    """

    source: int
    target: int
    distance: int
    successors: Mapping[int, FrozenSet[int]] = field(repr=False)
    depth: Mapping[int, int] = field(repr=False)

    @classmethod
    def from_distances(
        cls,
        neighbors: Mapping[int, Iterable[int]],
        from_source: Mapping[int, int],
        to_target: Mapping[int, int],
        source: int,
        target: int,
    ) -> "GeodesicDag":
        """
        Build the DAG from two distance tables.

        A vertex z is on a geodesic iff d(s,z) + d(z,t) = d(s,t); an arc z->w
        is kept iff both ends are on a geodesic and d(s,w) = d(s,z) + 1.

        :param neighbors: Adjacency of the 1-skeleton.
        :param from_source: BFS distances from ``source``.
        :param to_target: BFS distances from ``target``.
        :param source: Start vertex.
        :param target: End vertex.
        :return: The DAG.
        :rtype: GeodesicDag
        """
        total = from_source[target]
        inside = {z for z, d in from_source.items() if to_target.get(z, -1) == total - d}
        successors = {}
        for z in inside:
            dz = from_source[z]
            successors[z] = frozenset(w for w in neighbors[z] if w in inside and from_source[w] == dz + 1)
        return cls(
            source=source,
            target=target,
            distance=total,
            successors=successors,
            depth={z: from_source[z] for z in inside},
        )

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.successors)

    @cached_property
    def layers(self) -> Tuple[FrozenSet[int], ...]:
        grouped: List[set] = [set() for _ in range(self.distance + 1)]
        for z, d in self.depth.items():
            grouped[d].add(z)
        return tuple(frozenset(layer) for layer in grouped)

    @cached_property
    def forced(self) -> FrozenSet[int]:
        """Vertices met by every geodesic (the sole vertex of their layer)."""
        return frozenset(next(iter(layer)) for layer in self.layers if len(layer) == 1)

    def first_edges(self) -> List[Edge]:
        return sorted(edge_key(self.source, w) for w in self.successors[self.source])

    def count_paths(self) -> int:
        counts: Dict[int, int] = {self.target: 1}
        for z in sorted(self.depth, key=self.depth.get, reverse=True):
            if z != self.target:
                counts[z] = sum(counts[w] for w in self.successors[z])
        return counts[self.source]

    def paths(self) -> Iterator[Tuple[int, ...]]:
        """Enumerate every geodesic in lexicographic vertex order."""
        stack: List[Tuple[int, ...]] = [(self.source,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            if last == self.target:
                yield path
                continue
            for w in sorted(self.successors[last], reverse=True):
                stack.append(path + (w,))

    def path_avoiding(self, blocked: Iterable[int]) -> Optional[Tuple[int, ...]]:
        """
        A geodesic meeting none of ``blocked``, or None if every geodesic meets it.

        :param blocked: Vertex set to avoid.
        :type blocked: Iterable[int]
        :return: Witness geodesic or None.
        :rtype: Optional[Tuple[int, ...]]
        """
        blocked = frozenset(blocked)
        if self.source in blocked or self.target in blocked:
            return None
        if blocked & self.forced:
            return None
        for layer in self.layers:
            if len(layer) <= len(blocked) and layer <= blocked:
                return None
        parent: Dict[int, int] = {}
        queue = deque([self.source])
        seen = {self.source}
        while queue:
            z = queue.popleft()
            if z == self.target:
                path = [z]
                while path[-1] != self.source:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            for w in sorted(self.successors[z]):
                if w not in seen and w not in blocked:
                    seen.add(w)
                    parent[w] = z
                    queue.append(w)
        return None
