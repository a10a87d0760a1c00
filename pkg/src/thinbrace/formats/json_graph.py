"""JSON equivalent of BGF: parts and edges by vertex id."""

from pydantic import BaseModel, ValidationError

from thinbrace.errors import InputError, ParseError
from thinbrace.graph.model import BipartiteGraph


class GraphDocument(BaseModel):
    name: str | None = None
    part_a: list[str]
    part_b: list[str]
    edges: list[tuple[str, str]]


def parse_json_graph(text: str) -> BipartiteGraph:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"invalid graph document: {exc.error_count()} errors") from exc
    labels = [tuple(edge) for edge in doc.edges]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate edge in graph document")
    try:
        return BipartiteGraph.from_edges(doc.part_a, doc.part_b, labels, doc.name)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def serialize_json_graph(g: BipartiteGraph) -> str:
    doc = GraphDocument(
        name=g.name,
        part_a=list(g.part_a),
        part_b=list(g.part_b),
        edges=list(g.edge_labels()),
    )
    return doc.model_dump_json(indent=2)
