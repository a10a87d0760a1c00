"""Graphviz DOT export with part and shore membership as node attributes."""

from collections.abc import Iterable

from thinbrace.graph.model import BipartiteGraph, Shore


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    g: BipartiteGraph,
    shore: Shore | None = None,
    dashed: Iterable[tuple[str, str]] = (),
    title: str | None = None,
) -> str:
    """One undirected DOT graph; ``dashed`` edges (e.g. nonthin ones) are drawn dashed."""
    dashed = {frozenset(e) for e in dashed}
    lines = [f"graph {_quote(title or g.name or 'G')} {{"]
    for i, vid in enumerate(g.vertices):
        attrs = [f"part={'A' if i < g.a else 'B'}"]
        if shore is not None:
            inside = shore.mask >> i & 1
            attrs.append(f"shore={'X' if inside else 'Xbar'}")
            attrs.append(f"style=filled fillcolor={'lightblue' if inside else 'white'}")
        lines.append(f"  {_quote(vid)} [{' '.join(attrs)}];")
    for u, v in g.edge_labels():
        style = " [style=dashed]" if frozenset((u, v)) in dashed else ""
        lines.append(f"  {_quote(u)} -- {_quote(v)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
