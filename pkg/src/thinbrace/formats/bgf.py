"""BGF: a DIMACS-style text format for bipartite graphs.

    c <free text>
    c name <graph name>
    c labels a <id> <id> ...
    c labels b <id> <id> ...
    p bgf <a> <b> <m>
    e <i> <j>          (exactly m lines, 0 ≤ i < a, 0 ≤ j < b)

The ``name`` and ``labels`` comments are optional; without labels the ids are
a0.. and b0.. .
"""

from thinbrace.errors import ParseError
from thinbrace.graph.model import BipartiteGraph


def _int(token: str, what: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", line)
    return value


def parse_bgf(text: str) -> BipartiteGraph:
    name = None
    labels: dict[str, tuple[str, ...]] = {}
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}

    for number, raw in enumerate(text.split("\n"), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            if len(tokens) >= 2 and tokens[1] == "name":
                name = " ".join(tokens[2:]) or None
            elif len(tokens) >= 3 and tokens[1] == "labels" and tokens[2] in ("a", "b"):
                labels[tokens[2]] = tuple(tokens[3:])
            continue
        if kind == "p":
            if header is not None:
                raise ParseError("second header line", number)
            if len(tokens) != 5 or tokens[1] != "bgf":
                raise ParseError("header must read 'p bgf <a> <b> <m>'", number)
            header = (
                _int(tokens[2], "a", number),
                _int(tokens[3], "b", number),
                _int(tokens[4], "m", number),
            )
            continue
        if kind == "e":
            if header is None:
                raise ParseError("edge line before the header", number)
            if len(tokens) != 3:
                raise ParseError("edge line must read 'e <i> <j>'", number)
            a, b, m = header
            i, j = _int(tokens[1], "i", number), _int(tokens[2], "j", number)
            if i >= a:
                raise ParseError(f"endpoint i={i} out of range 0..{a - 1}", number)
            if j >= b:
                raise ParseError(f"endpoint j={j} out of range 0..{b - 1}", number)
            if (i, j) in seen:
                raise ParseError(f"duplicate edge {i} {j} (first on line {seen[(i, j)]})", number)
            if len(edges) == m:
                raise ParseError(f"more than m={m} edge lines", number)
            seen[(i, j)] = number
            edges.append((i, j))
            continue
        raise ParseError(f"unknown line type {kind!r}", number)

    if header is None:
        raise ParseError("missing 'p bgf' header")
    a, b, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")

    part_a = labels.get("a") or tuple(f"a{i}" for i in range(a))
    part_b = labels.get("b") or tuple(f"b{j}" for j in range(b))
    if len(part_a) != a or len(part_b) != b:
        raise ParseError("label comments do not match the part sizes in the header")
    return BipartiteGraph(part_a, part_b, tuple(edges), name)


def serialize_bgf(g: BipartiteGraph) -> str:
    lines = []
    if g.name:
        lines.append(f"c name {g.name}")
    lines.append("c labels a " + " ".join(g.part_a))
    lines.append("c labels b " + " ".join(g.part_b))
    lines.append(f"p bgf {g.a} {g.b} {g.m}")
    lines.extend(f"e {i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"
