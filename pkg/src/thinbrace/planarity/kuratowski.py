"""Brute-force Kuratowski oracle: search edge subsets for a K5 or K3,3 subdivision."""

from collections import Counter, defaultdict
from collections.abc import Iterable
from itertools import combinations

import networkx as nx

from thinbrace.errors import ResourceError
from thinbrace.graph.model import BipartiteGraph, Graph

ORACLE_CAP = 10

Pair = tuple[int, int]


def smooth(edges: Iterable[Pair]) -> nx.Graph | None:
    """Suppress degree-2 vertices; None when the result is not a simple graph."""
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            neighbours = adj[v]
            if len(neighbours) != 2:
                continue
            x, y = neighbours
            if x == y or v in (x, y):
                return None
            adj[x].remove(v)
            adj[y].remove(v)
            adj[x].append(y)
            adj[y].append(x)
            del adj[v]
            changed = True
    graph = nx.Graph()
    for v, neighbours in adj.items():
        if v in neighbours or len(set(neighbours)) != len(neighbours):
            return None
        graph.add_node(v)
        graph.add_edges_from((v, w) for w in neighbours)
    return graph


def kuratowski_type(edges: Iterable[Pair]) -> str | None:
    """Name of the Kuratowski graph the edge set subdivides (K5 or K3,3), else None."""
    graph = smooth(edges)
    if graph is None:
        return None
    degrees = {d for _, d in graph.degree()}
    if graph.number_of_nodes() == 5 and degrees == {4}:
        return "K5"
    if graph.number_of_nodes() == 6 and degrees == {3} and nx.is_bipartite(graph):
        return "K3,3"
    return None


def _branch_profile_ok(edges: tuple[Pair, ...]) -> bool:
    degrees = Counter()
    for u, v in edges:
        degrees[u] += 1
        degrees[v] += 1
    branch = [d for d in degrees.values() if d != 2]
    if len(branch) == 5:
        return all(d == 4 for d in branch)
    if len(branch) == 6:
        return all(d == 3 for d in branch)
    return False


def find_kuratowski_subgraph(g: Graph, cap: int = ORACLE_CAP) -> tuple[Pair, ...] | None:
    """Smallest Kuratowski subdivision inside g by exhaustive edge-subset search.

    A subdivision of K3,3 on at most n vertices has at most n + 3 edges, one of
    K5 at most n + 5, so subset sizes run from 9 to n + 5.
    """
    if g.n > cap:
        raise ResourceError("Kuratowski subgraph search", g.n, cap)
    pairs = g.pairs if isinstance(g, BipartiteGraph) else g.simple_pairs()
    for size in range(9, min(len(pairs), g.n + 5) + 1):
        for subset in combinations(pairs, size):
            if _branch_profile_ok(subset) and kuratowski_type(subset):
                return subset
    return None


def brute_force_planar(g: Graph) -> bool:
    return find_kuratowski_subgraph(g) is None
