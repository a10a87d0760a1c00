"""Library matching routines: Hopcroft–Karp for bipartite hosts, blossom for multigraphs."""

import logging

import networkx as nx

from thinbrace.graph.model import BipartiteGraph, Graph, MultiGraph
from thinbrace.utils.bitset import iter_bits

logger = logging.getLogger("thinbrace")


def _induced(graph: nx.Graph, alive: int, n: int) -> nx.Graph:
    if alive == (1 << n) - 1:
        return graph
    return graph.subgraph(iter_bits(alive))


def bipartite_maximum_matching(g: BipartiteGraph, alive: int | None = None) -> dict[int, int]:
    """Maximum matching of g[alive] by Hopcroft–Karp (augmenting paths)."""
    if alive is None:
        alive = g.full_mask
    graph = _induced(g.to_networkx(), alive, g.n)
    top = [v for v in iter_bits(alive & g.a_mask)]
    return nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)


def general_maximum_matching(g: MultiGraph, alive: int | None = None) -> set[tuple[int, int]]:
    """Maximum-cardinality matching of the underlying simple graph by Edmonds' blossom."""
    if alive is None:
        alive = g.full_mask
    graph = _induced(g.to_networkx(simple=True), alive, g.n)
    return nx.max_weight_matching(graph, maxcardinality=True)


def library_has_perfect_matching(g: Graph, alive: int | None = None) -> bool:
    if alive is None:
        alive = g.full_mask
    size = alive.bit_count()
    if size % 2:
        return False
    if size == 0:
        return True
    if isinstance(g, BipartiteGraph):
        # hopcroft_karp_matching maps both directions
        return len(bipartite_maximum_matching(g, alive)) == size
    return 2 * len(general_maximum_matching(g, alive)) == size
