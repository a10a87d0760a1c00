"""Neighbourhoods, cuts, contractions and degree statistics."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from thinbrace.errors import InputError
from thinbrace.graph.model import BipartiteGraph, Graph, MultiGraph, Shore
from thinbrace.utils.bitset import iter_bits, lowest_bit, popcount

logger = logging.getLogger("thinbrace")


@dataclass(frozen=True, slots=True)
class DegreeProfile:
    degrees: dict[str, int]
    n3: int
    min_degree: int
    max_degree: int

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees.values())


def neighborhood_mask(g: Graph, mask: int) -> int:
    """N(X) as a mask: vertices outside X with a neighbour in X."""
    reach = 0
    for v in iter_bits(mask):
        reach |= g.adj[v]
    return reach & ~mask


def neighborhood(g: Graph, xs: Iterable[str]) -> frozenset[str]:
    """N(X) = { y ∉ X : some x ∈ X is adjacent to y }."""
    return frozenset(g.ids(neighborhood_mask(g, g.mask(xs))))


def _as_mask(g: Graph, x: Shore | Iterable[str]) -> int:
    if isinstance(x, Shore):
        if x.order != g.n:
            raise InputError(f"Shore belongs to a graph on {x.order} vertices, not {g.n}")
        return x.mask
    return g.mask(x)


def cut_edge_indices(g: Graph, mask: int) -> tuple[int, ...]:
    """Indices (canonical edge order) of the edges with exactly one end in ``mask``."""
    return tuple(
        k for k, (u, v) in enumerate(g.pairs) if (mask >> u & 1) != (mask >> v & 1)
    )


def edges_between(g: Graph, xs: int, ys: int) -> tuple[int, ...]:
    """Indices of the edges of E[X, Y] (one end in X, the other in Y); X, Y disjoint."""
    return tuple(
        k
        for k, (u, v) in enumerate(g.pairs)
        if (xs >> u & 1 and ys >> v & 1) or (xs >> v & 1 and ys >> u & 1)
    )


def cut_size(g: Graph, mask: int) -> int:
    """|∂(X)| by counting, per vertex of X, its neighbours outside X (simple graphs)."""
    outside = g.full_mask & ~mask
    return sum(popcount(g.adj[v] & outside) for v in iter_bits(mask))


def edge_cut(g: Graph, x: Shore | Iterable[str]) -> tuple[tuple[str, str], ...]:
    """∂(X) = E[X, X̄] as edge labels in canonical edge order."""
    mask = _as_mask(g, x)
    return tuple(g.edge_label(k) for k in cut_edge_indices(g, mask))


def contract_mask(g: Graph, mask: int, label: str = "x") -> MultiGraph:
    """G/(X → x) for a shore mask; the contraction vertex is appended last."""
    keep = g.full_mask & ~mask
    if not keep:
        raise InputError("Cannot contract the whole vertex set (empty complement)")
    if not mask:
        raise InputError("Cannot contract an empty shore")
    kept = list(iter_bits(keep))
    position = {v: i for i, v in enumerate(kept)}
    vertices = [g.vertices[v] for v in kept]
    while label in vertices:
        label += "'"
    hub = len(kept)
    pairs = []
    for u, v in g.pairs:
        u_in, v_in = mask >> u & 1, mask >> v & 1
        if u_in and v_in:
            continue  # loop after shrinking
        pairs.append((hub if u_in else position[u], hub if v_in else position[v]))
    name = f"{g.name}/{label}" if g.name else None
    return MultiGraph(tuple(vertices) + (label,), tuple(pairs), name)


def contract_shore(g: Graph, x: Shore | Iterable[str], label: str = "x") -> MultiGraph:
    """Shrink X to a single contraction vertex, keeping parallel edges and deleting loops."""
    return contract_mask(g, _as_mask(g, x), label)


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = {vid: g.degree(i) for i, vid in enumerate(g.vertices)}
    values = list(degrees.values()) or [0]
    return DegreeProfile(
        degrees=degrees,
        n3=sum(1 for d in degrees.values() if d == 3),
        min_degree=min(values),
        max_degree=max(values),
    )


def component_mask(g: Graph, start: int, alive: int | None = None) -> int:
    """Vertices reachable from ``start`` inside ``alive`` (default: all vertices)."""
    if alive is None:
        alive = g.full_mask
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & alive & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_mask(g, 0) == g.full_mask


def is_connected_mask(g: Graph, alive: int) -> bool:
    if not alive:
        return True
    return component_mask(g, lowest_bit(alive), alive) == alive


def parts_of(g: BipartiteGraph, mask: int) -> tuple[int, int]:
    """(X ∩ A, X ∩ B) as masks."""
    return mask & g.a_mask, mask & g.b_mask
