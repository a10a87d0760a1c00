"""Graph file formats: BGF, its JSON equivalent, and DOT export."""

from pathlib import Path

from thinbrace.errors import InputError
from thinbrace.formats.bgf import parse_bgf, serialize_bgf
from thinbrace.formats.dot import to_dot
from thinbrace.formats.json_graph import parse_json_graph, serialize_json_graph
from thinbrace.graph.model import BipartiteGraph


def parse_graph(text: str) -> BipartiteGraph:
    """BGF or JSON, told apart by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_bgf(text)


def load_graph(path: str | Path) -> BipartiteGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


__all__ = [
    "load_graph",
    "parse_bgf",
    "parse_graph",
    "parse_json_graph",
    "serialize_bgf",
    "serialize_json_graph",
    "to_dot",
]
