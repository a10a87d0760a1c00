"""Graph values: the bipartite host graph, contraction multigraphs, and shores.

Vertices carry string ids on input and dense integer indices internally. For a
BipartiteGraph the A-vertices take indices 0..a-1 and the B-vertices a..a+b-1,
so every vertex subset is a single int bitset (at most 64 vertices).
"""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

from thinbrace.errors import InputError
from thinbrace.utils.bitset import iter_bits, popcount

MAX_VERTICES = 64


def _index_ids(ids: tuple[str, ...]) -> dict[str, int]:
    index: dict[str, int] = {}
    for i, vid in enumerate(ids):
        if vid in index:
            raise InputError(f"Duplicate vertex id: {vid!r}")
        index[vid] = i
    return index


@dataclass(frozen=True, slots=True)
class BipartiteGraph:
    """Simple bipartite graph G[A, B] with canonically ordered edges.

    ``edges`` holds (a-index, b-index) pairs sorted lexicographically; parts are
    ordered and the order is part of the value.
    """

    part_a: tuple[str, ...]
    part_b: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    name: str | None = None
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b = len(self.part_a), len(self.part_b)
        if a + b > MAX_VERTICES:
            raise InputError(f"Graphs beyond {MAX_VERTICES} vertices are not supported")
        index = _index_ids(self.part_a + self.part_b)
        adj = [0] * (a + b)
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < a and 0 <= j < b):
                raise InputError(f"Edge ({i}, {j}) does not join part A to part B")
            if (i, j) in seen:
                raise InputError(
                    f"Parallel edge {self.part_a[i]}-{self.part_b[j]} in a simple graph"
                )
            seen.add((i, j))
            adj[i] |= 1 << (a + j)
            adj[a + j] |= 1 << i
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(
        cls,
        part_a: Iterable[str],
        part_b: Iterable[str],
        edges: Iterable[tuple[str, str]],
        name: str | None = None,
    ) -> "BipartiteGraph":
        """Build from vertex ids; each edge may list its endpoints in either order."""
        part_a, part_b = tuple(part_a), tuple(part_b)
        a_index = {v: i for i, v in enumerate(part_a)}
        b_index = {v: j for j, v in enumerate(part_b)}
        pairs = []
        for u, v in edges:
            if u in a_index and v in b_index:
                pairs.append((a_index[u], b_index[v]))
            elif v in a_index and u in b_index:
                pairs.append((a_index[v], b_index[u]))
            elif u == v:
                raise InputError(f"Self-loop at {u!r}")
            elif (u in a_index or u in b_index) and (v in a_index or v in b_index):
                raise InputError(f"Edge {u}-{v} joins two vertices of the same part")
            else:
                raise InputError(f"Edge {u}-{v} has an unknown endpoint")
        return cls(part_a, part_b, tuple(pairs), name)

    @classmethod
    def from_columns(
        cls, a: int, columns: Iterable[int], name: str | None = None
    ) -> "BipartiteGraph":
        """Build from biadjacency columns: ``columns[j]`` is the A-mask of B-vertex j."""
        columns = tuple(columns)
        pairs = tuple((i, j) for j, col in enumerate(columns) for i in iter_bits(col))
        return cls(
            tuple(f"a{i}" for i in range(a)),
            tuple(f"b{j}" for j in range(len(columns))),
            pairs,
            name,
        )

    # --- sizes and masks ---

    @property
    def a(self) -> int:
        return len(self.part_a)

    @property
    def b(self) -> int:
        return len(self.part_b)

    @property
    def n(self) -> int:
        return len(self.part_a) + len(self.part_b)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.part_a + self.part_b

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def a_mask(self) -> int:
        return (1 << self.a) - 1

    @property
    def b_mask(self) -> int:
        return self.full_mask ^ self.a_mask

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Edges as global index pairs (A-index, a + B-index)."""
        a = self.a
        return tuple((i, a + j) for i, j in self.edges)

    @property
    def columns(self) -> tuple[int, ...]:
        """Biadjacency columns: A-mask of each B-vertex."""
        a = self.a
        return tuple(self.adj[a + j] for j in range(self.b))

    # --- lookups ---

    def index(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise InputError(f"Unknown vertex id: {vid!r}") from None

    def mask(self, ids: Iterable[str]) -> int:
        mask = 0
        for vid in ids:
            mask |= 1 << self.index(vid)
        return mask

    def ids(self, mask: int) -> tuple[str, ...]:
        vertices = self.vertices
        return tuple(vertices[i] for i in iter_bits(mask))

    def edge_label(self, k: int) -> tuple[str, str]:
        i, j = self.edges[k]
        return self.part_a[i], self.part_b[j]

    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.edge_label(k) for k in range(self.m))

    def edge_index(self, u: str, v: str) -> int:
        """Index of edge uv in canonical edge order; endpoints in either order."""
        i, j = self.index(u), self.index(v)
        if i > j:
            i, j = j, i
        if i >= self.a or j < self.a:
            raise InputError(f"{u}-{v} is not an edge")
        try:
            return self.edges.index((i, j - self.a))
        except ValueError:
            raise InputError(f"{u}-{v} is not an edge") from None

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    # --- derived graphs ---

    def without_edge(self, k: int) -> "BipartiteGraph":
        edges = self.edges[:k] + self.edges[k + 1 :]
        name = f"{self.name}-e{k}" if self.name else None
        return BipartiteGraph(self.part_a, self.part_b, edges, name)

    def swapped(self) -> "BipartiteGraph":
        """Same graph with the roles of A and B exchanged."""
        return BipartiteGraph(
            self.part_b, self.part_a, tuple((j, i) for i, j in self.edges), self.name
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, vid in enumerate(self.vertices):
            graph.add_node(i, label=vid, bipartite=0 if i < self.a else 1)
        graph.add_edges_from(self.pairs)
        return graph

    def to_multigraph(self) -> "MultiGraph":
        return MultiGraph(self.vertices, self.pairs, self.name)


@dataclass(frozen=True, slots=True)
class MultiGraph:
    """General multigraph (parallel edges allowed, loops forbidden).

    Produced by shore contraction; also used for the small non-bipartite
    catalogue. ``edges`` holds index pairs (i < j), sorted, with repeats.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    name: str | None = None
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if n > MAX_VERTICES:
            raise InputError(f"Graphs beyond {MAX_VERTICES} vertices are not supported")
        index = _index_ids(self.vertices)
        adj = [0] * n
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise InputError(f"Loop at {self.vertices[u]!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"Edge ({u}, {v}) has an unknown endpoint")
            if u > v:
                u, v = v, u
            normalized.append((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]], name: str | None = None
    ) -> "MultiGraph":
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        try:
            pairs = tuple((index[u], index[v]) for u, v in edges)
        except KeyError as exc:
            raise InputError(f"Unknown vertex id: {exc.args[0]!r}") from None
        return cls(vertices, pairs, name)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self.edges

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def simple_pairs(self) -> tuple[tuple[int, int], ...]:
        """Distinct endpoint pairs, in edge order."""
        return tuple(dict.fromkeys(self.edges))

    def index(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise InputError(f"Unknown vertex id: {vid!r}") from None

    def mask(self, ids: Iterable[str]) -> int:
        mask = 0
        for vid in ids:
            mask |= 1 << self.index(vid)
        return mask

    def ids(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def edge_label(self, k: int) -> tuple[str, str]:
        u, v = self.edges[k]
        return self.vertices[u], self.vertices[v]

    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.edge_label(k) for k in range(self.m))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx(simple=True))

    def to_networkx(self, simple: bool = False) -> nx.Graph | nx.MultiGraph:
        graph = nx.Graph() if simple else nx.MultiGraph()
        for i, vid in enumerate(self.vertices):
            graph.add_node(i, label=vid)
        graph.add_edges_from(self.edges)
        return graph


Graph = BipartiteGraph | MultiGraph


@dataclass(frozen=True, slots=True)
class Shore:
    """A vertex subset X (bitmask) of a host graph on ``order`` vertices; defines the cut ∂(X)."""

    mask: int
    order: int

    def __post_init__(self):
        full = (1 << self.order) - 1
        if self.mask & ~full:
            raise InputError("Shore contains vertices outside the host graph")
        size = popcount(self.mask)
        if not 1 <= size <= self.order - 1:
            raise InputError(f"Shore size must lie in 1..{self.order - 1}, got {size}")

    @classmethod
    def of(cls, g: Graph, ids: Iterable[str]) -> "Shore":
        return cls(g.mask(ids), g.n)

    @property
    def size(self) -> int:
        return popcount(self.mask)

    @property
    def complement_mask(self) -> int:
        return ((1 << self.order) - 1) ^ self.mask

    @property
    def complement(self) -> "Shore":
        return Shore(self.complement_mask, self.order)

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1

    @property
    def trivial(self) -> bool:
        return self.size == 1 or self.size == self.order - 1

    @property
    def min_side(self) -> int:
        return min(self.size, self.order - self.size)

    def canonical(self) -> "Shore":
        """The shore of {X, X̄} that contains vertex 0."""
        return self if self.mask & 1 else self.complement

    def oriented_to(self, v: int) -> "Shore":
        """The shore of {X, X̄} that contains vertex ``v``."""
        return self if self.mask >> v & 1 else self.complement

    def members(self, g: Graph) -> tuple[str, ...]:
        return g.ids(self.mask)
