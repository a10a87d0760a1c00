"""Exact backtracking perfect-matching engine over bitsets.

Works on bipartite graphs and on contraction multigraphs alike. The search
always matches the lowest unmatched vertex next and tries its edges in
canonical edge order, so the output order is deterministic.
"""

from collections.abc import Iterator
from functools import lru_cache

from thinbrace.graph.model import Graph
from thinbrace.utils.bitset import lowest_bit


@lru_cache(maxsize=4096)
def _incidence(g: Graph, distinct_pairs: bool) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per vertex: (edge index, other endpoint) in edge order."""
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    seen = set()
    for k, (u, v) in enumerate(g.pairs):
        if distinct_pairs:
            if (u, v) in seen:
                continue
            seen.add((u, v))
        incident[u].append((k, v))
        incident[v].append((k, u))
    return tuple(tuple(row) for row in incident)


def iter_matchings(
    g: Graph, alive: int | None = None, distinct_pairs: bool = False
) -> Iterator[tuple[int, ...]]:
    """Yield every perfect matching of g[alive] as a sorted tuple of edge indices.

    With ``distinct_pairs`` parallel edges collapse to their first copy, so each
    matched set of endpoint pairs is produced once.
    """
    if alive is None:
        alive = g.full_mask
    if alive.bit_count() % 2:
        return
    incident = _incidence(g, distinct_pairs)
    chosen: list[int] = []

    def extend(remaining: int) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(sorted(chosen))
            return
        v = lowest_bit(remaining)
        rest = remaining ^ (1 << v)
        for k, w in incident[v]:
            if rest >> w & 1:
                chosen.append(k)
                yield from extend(rest ^ (1 << w))
                chosen.pop()

    yield from extend(alive)


def find_matching(g: Graph, alive: int | None = None) -> tuple[int, ...] | None:
    """First perfect matching of g[alive] found by the backtracking search, or None."""
    if alive is None:
        alive = g.full_mask
    if alive.bit_count() % 2:
        return None
    adj = g.adj
    # a vertex with no live neighbour kills the branch early
    for v in range(g.n):
        if alive >> v & 1 and not adj[v] & alive:
            return None
    return next(iter_matchings(g, alive, distinct_pairs=True), None)


def count_matchings(g: Graph, alive: int | None = None) -> int:
    """Number of perfect matchings, parallel edges counted as distinct choices."""
    return sum(1 for _ in iter_matchings(g, alive))
