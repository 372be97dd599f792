"""
src.schemas.complex

================================================================================
Pydantic Schemas for Complex Documents
================================================================================

Overview
--------
The on-disk JSON format of polygonal complexes:

    {"vertices": [{"id": 0, "label": "(0,0)"}, ...],
     "edges": [[0, 1], ...],
     "polygons": [[0, 1, 3, 2], ...]}

and the dump format of tame-complex portions, whose vertices additionally
carry their orbit type and canonical polynomial strings.

Edges and polygons are only type-checked here; structural problems (loops,
missing boundary edges, non-simple cycles) are reported by the validator,
not rejected at parse time.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class VertexDocument(BaseModel):
    """
    A vertex entry.

    :param id: Integer vertex id.
    :type id: int
    :param label: Opaque label.
    :type label: str
    """

    id: int
    label: str = ""


class ComplexDocument(BaseModel):
    vertices: List[VertexDocument]
    edges: List[List[int]] = Field(default_factory=list)
    polygons: List[List[int]] = Field(default_factory=list)


class TameVertexDocument(BaseModel):
    """
    A vertex of a tame-complex portion.

    :param id: Vertex id in the portion's complex.
    :type id: int
    :param type: Orbit type 1, 2 or 3.
    :type type: int
    :param components: Canonical polynomial strings (type 3: the span key).
    :type components: List[str]
    :param form: Type 3 only: q pulled back to the span key, in e1..e4.
    :type form: Optional[str]
    """

    id: int
    type: int
    components: List[str]
    form: Optional[str] = None


class TamePortionDocument(BaseModel):
    vertices: List[TameVertexDocument]
    edges: List[List[int]]
    squares: List[List[int]]
    elements: List[str]
    word_length: Optional[int] = None
