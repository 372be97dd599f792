"""
src.models

================================================================================
Domain Model Package for the Uber Contraction Toolkit
================================================================================

Overview
--------
This package defines the in-memory objects the checkers and the tame-complex
computations operate on. Models are immutable once built; derived data
(distance tables, links, geodesic DAGs) is computed lazily and cached on the
instance.

Exported Models
---------------
- PolygonalComplex: Finite 2-complex with labelled vertices, edges and polygons.
- LinkGraph: Link of a vertex, one node per incident edge, one arc per corner.
- GeodesicDag: Every geodesic between two vertices, layered by distance.
- CheckpointSystem: Ordered, disjoint vertex sets with strictly increasing indices.
- Generator / TameElement: Tame automorphisms with forward and inverse maps.
- Type1Vertex / Type2Vertex / Type3Vertex: Vertices of the tame square complex.
- TamePortion: A finite portion of the square complex with its vertex index.

Key Characteristics
--------------------
- Graph structure is held in frozen networkx graphs.
- Exact rational arithmetic; no floating point in equality tests.
"""

from .complex import PolygonalComplex
from .link import LinkGraph
from .dag import GeodesicDag
from .checkpoint import CheckpointSystem
from .generator import Generator
from .tame_element import TameElement
from .orbit_vertex import Type1Vertex, Type2Vertex, Type3Vertex
from .portion import TamePortion

__all__ = [
    "PolygonalComplex",
    "LinkGraph",
    "GeodesicDag",
    "CheckpointSystem",
    "Generator",
    "TameElement",
    "Type1Vertex",
    "Type2Vertex",
    "Type3Vertex",
    "TamePortion",
]
