"""Perfect-matching existence, enumeration and the matching-covered test."""

import logging
from dataclasses import dataclass

from thinbrace.config import settings
from thinbrace.errors import InputError, ResourceError
from thinbrace.graph.model import Graph
from thinbrace.graph.ops import is_connected
from thinbrace.matching.augmenting import library_has_perfect_matching
from thinbrace.matching.engine import iter_matchings

logger = logging.getLogger("thinbrace")


@dataclass(frozen=True, slots=True)
class PerfectMatching:
    """Edge indices (canonical edge order) of a perfect matching of the host."""

    edges: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, edges: tuple[int, ...]) -> "PerfectMatching":
        covered = 0
        for k in edges:
            u, v = g.pairs[k]
            if covered >> u & 1 or covered >> v & 1:
                raise InputError(f"Edge {g.edge_label(k)} covers a vertex twice")
            covered |= 1 << u | 1 << v
        if covered != g.full_mask:
            raise InputError("Edge set does not cover every vertex")
        return cls(tuple(sorted(edges)))

    def crossing(self, g: Graph, mask: int) -> int:
        """|M ∩ ∂(X)|."""
        count = 0
        for k in self.edges:
            u, v = g.pairs[k]
            if (mask >> u & 1) != (mask >> v & 1):
                count += 1
        return count

    def labels(self, g: Graph) -> tuple[tuple[str, str], ...]:
        return tuple(g.edge_label(k) for k in self.edges)


@dataclass(frozen=True, slots=True)
class CoverageReport:
    covered: bool
    uncovered_edges: tuple[tuple[str, str], ...]
    has_perfect_matching: bool
    connected: bool


def has_perfect_matching(g: Graph, alive: int | None = None) -> bool:
    """True iff g (or its subgraph induced on ``alive``) has a perfect matching."""
    return library_has_perfect_matching(g, alive)


def check_enumeration_cap(g: Graph, cap: int | None = None) -> None:
    cap = settings.enumeration_cap if cap is None else cap
    if g.n > cap:
        raise ResourceError("perfect-matching enumeration", g.n, cap)


def enumerate_perfect_matchings(
    g: Graph, cap: int | None = None, distinct_pairs: bool = False
) -> list[PerfectMatching]:
    """All perfect matchings, each once, lexicographic by canonical edge order.

    Parallel edges are distinct choices unless ``distinct_pairs`` is set, in
    which case each set of matched endpoint pairs appears once.
    """
    check_enumeration_cap(g, cap)
    found = sorted(iter_matchings(g, distinct_pairs=distinct_pairs))
    return [PerfectMatching(edges) for edges in found]


def uncovered_edge_indices(g: Graph) -> tuple[int, ...]:
    """Edges uv of g such that g - {u, v} has no perfect matching."""
    full = g.full_mask
    verdict: dict[tuple[int, int], bool] = {}
    uncovered = []
    for k, (u, v) in enumerate(g.pairs):
        if (u, v) not in verdict:
            verdict[(u, v)] = has_perfect_matching(g, full & ~(1 << u | 1 << v))
        if not verdict[(u, v)]:
            uncovered.append(k)
    return tuple(uncovered)


def is_matching_covered(g: Graph) -> CoverageReport:
    """Connected, with every edge in some perfect matching.

    A graph without perfect matchings is reported uncovered with every edge listed.
    """
    connected = is_connected(g)
    exists = has_perfect_matching(g)
    if not exists:
        uncovered = tuple(range(g.m))
    else:
        uncovered = uncovered_edge_indices(g)
    covered = exists and connected and not uncovered and g.n >= 2
    return CoverageReport(
        covered=covered,
        uncovered_edges=tuple(g.edge_label(k) for k in uncovered),
        has_perfect_matching=exists,
        connected=connected,
    )
