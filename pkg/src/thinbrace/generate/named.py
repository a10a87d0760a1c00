"""Named graphs with deterministic labelling."""

import re
from itertools import product

from thinbrace.errors import InputError
from thinbrace.graph.model import BipartiteGraph, MultiGraph

NAMED_GRAPHS = ("c4", "c<2k>", "path4", "k<p>,<q>", "q3", "heawood")
NAMED_GENERAL_GRAPHS = ("k4", "k5", "prism", "petersen")

_COMPLETE = re.compile(r"k(\d+),(\d+)")
_CYCLE = re.compile(r"c(\d+)")


def even_cycle(k: int, name: str | None = None) -> BipartiteGraph:
    """C_{2k}: a1 b1 a2 b2 ... ak bk a1."""
    if k < 2:
        raise InputError(f"An even cycle needs at least 4 vertices, got {2 * k}")
    part_a = tuple(f"a{i}" for i in range(1, k + 1))
    part_b = tuple(f"b{i}" for i in range(1, k + 1))
    edges = [(i, i) for i in range(k)] + [((i + 1) % k, i) for i in range(k)]
    return BipartiteGraph(part_a, part_b, tuple(edges), name or f"c{2 * k}")


def complete_bipartite(p: int, q: int) -> BipartiteGraph:
    if p < 1 or q < 1:
        raise InputError(f"K{p},{q} needs both parts non-empty")
    part_a = tuple(f"a{i}" for i in range(1, p + 1))
    part_b = tuple(f"b{j}" for j in range(1, q + 1))
    return BipartiteGraph(part_a, part_b, tuple(product(range(p), range(q))), f"k{p},{q}")


def path_of_length_three() -> BipartiteGraph:
    return BipartiteGraph.from_edges(
        ("a", "c"), ("b", "d"), [("a", "b"), ("b", "c"), ("c", "d")], "path4"
    )


def cube() -> BipartiteGraph:
    """Q3 on bit strings; even-weight strings form part A."""
    words = ["".join(bits) for bits in product("01", repeat=3)]
    part_a = tuple(w for w in words if w.count("1") % 2 == 0)
    part_b = tuple(w for w in words if w.count("1") % 2 == 1)
    edges = [
        (u, v) for u in part_a for v in part_b if sum(x != y for x, y in zip(u, v)) == 1
    ]
    return BipartiteGraph.from_edges(part_a, part_b, edges, "q3")


def heawood() -> BipartiteGraph:
    """Point-line incidence graph of the Fano plane; line i is {i, i+1, i+3} mod 7."""
    points = tuple(f"p{i}" for i in range(7))
    lines = tuple(f"l{i}" for i in range(7))
    edges = [(f"p{(i + d) % 7}", f"l{i}") for i in range(7) for d in (0, 1, 3)]
    return BipartiteGraph.from_edges(points, lines, edges, "heawood")


def named_graph(name: str) -> BipartiteGraph:
    key = name.strip().lower()
    if key == "c4":
        return even_cycle(2, "c4")
    if key == "q3":
        return cube()
    if key == "heawood":
        return heawood()
    if key in ("path4", "p4"):
        return path_of_length_three()
    if match := _COMPLETE.fullmatch(key):
        return complete_bipartite(int(match.group(1)), int(match.group(2)))
    if (match := _CYCLE.fullmatch(key)) and int(match.group(1)) % 2 == 0:
        return even_cycle(int(match.group(1)) // 2)
    raise InputError(f"Unknown graph name: {name!r} (known: {', '.join(NAMED_GRAPHS)})")


def named_general_graph(name: str) -> MultiGraph:
    """Small non-bipartite graphs: k4, k5, prism, petersen."""
    key = name.strip().lower()
    if key in ("k4", "k5"):
        size = int(key[1])
        vertices = tuple(f"v{i}" for i in range(size))
        edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
        return MultiGraph(vertices, tuple(edges), key)
    if key == "prism":
        vertices = ("t0", "t1", "t2", "u0", "u1", "u2")
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
        return MultiGraph(vertices, tuple(edges), key)
    if key == "petersen":
        vertices = tuple(f"o{i}" for i in range(5)) + tuple(f"i{i}" for i in range(5))
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, 5 + i) for i in range(5)]
        return MultiGraph(vertices, tuple(outer + inner + spokes), key)
    raise InputError(
        f"Unknown general graph name: {name!r} (known: {', '.join(NAMED_GENERAL_GRAPHS)})"
    )
