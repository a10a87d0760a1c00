"""Thin / nonthin edge classification with S-cut witnesses."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from thinbrace.brace.recognition import MIN_ORDER_FOR_CHARACTERIZATIONS, brace_quick
from thinbrace.cuts.shores import odd_shore_masks
from thinbrace.cuts.tight import covered, tight_by_matchings, tight_by_parts
from thinbrace.errors import DomainError, InputError
from thinbrace.graph.model import BipartiteGraph, Shore
from thinbrace.graph.ops import edges_between
from thinbrace.matching.coverage import has_perfect_matching

logger = logging.getLogger("thinbrace")

# odd shores with both sides > 3 have both sides ≥ 5
S_CUT_MIN_SIDE = 5


@dataclass(frozen=True, slots=True)
class EdgeThinness:
    edge: tuple[str, str]
    edge_index: int
    thin: bool
    s_cuts: tuple[Shore, ...]
    g_minus_e_matching_covered: bool
    identity_holds: bool = True
    anomaly: str | None = None


def require_brace(g: BipartiteGraph) -> None:
    if not isinstance(g, BipartiteGraph):
        raise InputError("Thin edges are defined for bipartite graphs only")
    if g.n < MIN_ORDER_FOR_CHARACTERIZATIONS:
        raise DomainError(f"Thin edges are defined in braces with at least six vertices (n={g.n})")
    if not brace_quick(g):
        raise DomainError("Thin edges are defined in braces only")


def s_cut_identity(g: BipartiteGraph, k: int, shore: Shore) -> bool:
    """With u ∈ X ∩ A: |X ∩ A| = |X ∩ B| - 1 and E[X ∩ A, X̄ ∩ B] = {uv}."""
    u, _ = g.pairs[k]
    x = shore.oriented_to(u).mask
    xa, xb = x & g.a_mask, x & g.b_mask
    outside_b = g.b_mask & ~x
    return xa.bit_count() == xb.bit_count() - 1 and edges_between(g, xa, outside_b) == (k,)


def _s_cut_masks(g: BipartiteGraph, k: int) -> tuple[list[int], bool, str | None]:
    """S-cut masks of edge k, whether G - e is matching covered, and any anomaly."""
    h = g.without_edge(k)
    h_covered = covered(h)
    masks = odd_shore_masks(g.n, S_CUT_MIN_SIDE)
    anomaly = None
    if h_covered:
        found = []
        for mask in masks:
            if not tight_by_parts(h, mask):
                continue
            # the characterization only accelerates; the matchings decide
            if tight_by_matchings(h, mask):
                found.append(mask)
            else:
                anomaly = "bipartite tight test disagrees with perfect matchings"
                logger.error("Edge %s of %s: %s", g.edge_label(k), g.name or "graph", anomaly)
        return found, True, anomaly

    anomaly = "G - e is not matching covered"
    logger.warning("Edge %s of %s: %s", g.edge_label(k), g.name or "graph", anomaly)
    if not has_perfect_matching(h):
        return [], False, anomaly + " and has no perfect matching"
    return [mask for mask in masks if tight_by_matchings(h, mask)], False, anomaly


def _edge_thinness(g: BipartiteGraph, k: int) -> EdgeThinness:
    masks, h_covered, anomaly = _s_cut_masks(g, k)
    u, _ = g.pairs[k]
    shores = tuple(sorted((Shore(m, g.n).oriented_to(u) for m in masks), key=lambda s: s.mask))
    identity = all(s_cut_identity(g, k, shore) for shore in shores)
    if not identity:
        logger.error("S-cut identity fails for edge %s of %s", g.edge_label(k), g.name or "graph")
    return EdgeThinness(
        edge=g.edge_label(k),
        edge_index=k,
        thin=not shores,
        s_cuts=shores,
        g_minus_e_matching_covered=h_covered,
        identity_holds=identity,
        anomaly=anomaly,
    )


def classify_edges_thin(g: BipartiteGraph) -> list[EdgeThinness]:
    """Classify every edge of a brace (n ≥ 6), in canonical edge order."""
    require_brace(g)
    return [_edge_thinness(g, k) for k in range(g.m)]


def _resolve_edge(g: BipartiteGraph, e: int | Iterable[str]) -> int:
    if isinstance(e, int):
        if not 0 <= e < g.m:
            raise InputError(f"Edge index {e} out of range")
        return e
    u, v = tuple(e)
    return g.edge_index(u, v)


def find_s_cuts(g: BipartiteGraph, e: int | Iterable[str]) -> list[Shore]:
    """All S-cuts of e (empty iff e is thin), oriented to hold e's A-endpoint.

    Several S-cuts may exist for one edge; all are returned.
    """
    require_brace(g)
    return list(_edge_thinness(g, _resolve_edge(g, e)).s_cuts)


def edge_thinness(g: BipartiteGraph, e: int | Iterable[str]) -> EdgeThinness:
    require_brace(g)
    return _edge_thinness(g, _resolve_edge(g, e))
