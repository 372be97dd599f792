"""
src.crud.complexes

================================================================================
Persistence of Polygonal Complexes
================================================================================

Overview
--------
Loads and saves the JSON complex format, and exports 1-skeletons and link
graphs as Graphviz DOT text. Documents are parsed with the pydantic schemas
of `src.schemas.complex`; structural problems inside a well-formed
document are left to the validator.

Key Characteristics
--------------------
- Malformed JSON raises `InputError` carrying the line and column
- Duplicate vertex ids raise `InputError`
- Output is byte-stable: sorted keys, fixed indentation, sorted DOT lines
"""

import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from src.exceptions.custom_exceptions import InputError
from src.models.complex import PolygonalComplex
from src.models.link import LinkGraph
from src.schemas.complex import ComplexDocument, VertexDocument
from src.utils.logger_util import log_error

PathLike = Union[str, Path]


def parse_complex(text: str, source: str = "<input>") -> PolygonalComplex:
    """
    Build a complex from JSON text.

    :param text: The document.
    :type text: str
    :param source: Name used in error details.
    :type source: str
    :raises InputError: On malformed JSON, a schema mismatch or duplicate vertex ids.
    :return: The complex.
    :rtype: PolygonalComplex
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        log_error(e, function_name="parse_complex", context={"source": source})
        raise InputError(
            "Malformed JSON",
            details={"source": source, "line": e.lineno, "column": e.colno, "reason": e.msg},
        ) from e
    try:
        document = ComplexDocument.model_validate(raw)
    except ValidationError as e:
        raise InputError(
            "Document does not match the complex format",
            details={"source": source, "errors": [err["msg"] for err in e.errors()]},
        ) from e

    labels = {}
    for vertex in document.vertices:
        if vertex.id in labels:
            raise InputError("Duplicate vertex id", details={"source": source, "id": vertex.id})
        labels[vertex.id] = vertex.label or str(vertex.id)
    return PolygonalComplex(labels, document.edges, document.polygons)


def load_complex(path: PathLike) -> PolygonalComplex:
    """
    Read a complex from a JSON file.

    :raises InputError: If the file is missing or unreadable, or its content is malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        log_error(e, function_name="load_complex", context={"path": str(path)})
        raise InputError("Cannot read complex file", details={"path": str(path), "reason": e.strerror}) from e
    return parse_complex(text, source=str(path))


def complex_to_document(c: PolygonalComplex) -> ComplexDocument:
    return ComplexDocument(
        vertices=[VertexDocument(id=v, label=label) for v, label in sorted(c.labels.items())],
        edges=[list(e) for e in c.raw_edges],
        polygons=[list(p) for p in c.polygons],
    )


def dump_complex(c: PolygonalComplex) -> str:
    return json.dumps(complex_to_document(c).model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def save_complex(c: PolygonalComplex, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(dump_complex(c), encoding="utf-8")
    return path


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def complex_to_dot(c: PolygonalComplex, name: str = "complex") -> str:
    """
    DOT text of the 1-skeleton, vertices labelled by their labels.

    :param c: The complex.
    :type c: PolygonalComplex
    :param name: Graph name.
    :type name: str
    :return: An undirected DOT graph.
    :rtype: str
    """
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {v} [label={_quote(label)}];" for v, label in sorted(c.labels.items())]
    lines += [f"  {u} -- {v};" for u, v in c.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def link_to_dot(c: PolygonalComplex, link: LinkGraph) -> str:
    """DOT text of a link graph: one node per edge at the base vertex, one arc per corner."""
    def node(e) -> str:
        return _quote(f"{e[0]}-{e[1]}")

    def label(e) -> str:
        other = e[1] if e[0] == link.base else e[0]
        return _quote(c.label(other))

    lines = [f"graph {_quote(f'link_{link.base}')} {{"]
    lines += [f"  {node(e)} [label={label(e)}];" for e in sorted(link.nodes)]
    lines += [f"  {node(a)} -- {node(b)};" for a, b in sorted(link.arcs)]
    lines.append("}")
    return "\n".join(lines) + "\n"
