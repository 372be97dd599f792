"""
src.models.portion

================================================================================
Finite Portions of the Tame Square Complex
================================================================================

Overview
--------
A `TamePortion` is a finite subcomplex of the tame square complex: a
`PolygonalComplex` whose vertex ids index a tuple of orbit vertices, plus the
tame elements whose squares generated it. Each element t contributes the
image under t of the standard square, i.e. the square spanned by the
components (f1, f2, f3, f4) of t⁻¹ with vertex cycle

    [f1], [f1, f2], [f1, f2, f3, f4], [f1, f3]
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from src.models.complex import PolygonalComplex
from src.models.orbit_vertex import OrbitVertex
from src.models.tame_element import TameElement


@dataclass(frozen=True)
class TamePortion:
    complex: PolygonalComplex
    vertices: Tuple[OrbitVertex, ...]
    elements: Tuple[TameElement, ...]
    word_length: Optional[int] = None
    _index: Dict[OrbitVertex, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self._index:
            self._index.update({vertex: i for i, vertex in enumerate(self.vertices)})

    def find(self, vertex: OrbitVertex) -> Optional[int]:
        return self._index.get(vertex)

    def vertex(self, vertex_id: int) -> OrbitVertex:
        return self.vertices[vertex_id]

    @property
    def square_count(self) -> int:
        return len(self.complex.polygons)
