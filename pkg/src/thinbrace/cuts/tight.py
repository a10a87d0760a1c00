"""Tight-cut decisions: the definitional test and the bipartite characterization."""

import logging
from functools import lru_cache

from thinbrace.errors import DomainError, InputError
from thinbrace.graph.model import BipartiteGraph, Graph, Shore
from thinbrace.graph.ops import neighborhood_mask
from thinbrace.matching.coverage import check_enumeration_cap, is_matching_covered
from thinbrace.matching.engine import iter_matchings

logger = logging.getLogger("thinbrace")


@lru_cache(maxsize=1024)
def covered(g: Graph) -> bool:
    return is_matching_covered(g).covered


@lru_cache(maxsize=1024)
def matched_pairs(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Perfect matchings by distinct endpoint pairs; crossing counts depend on nothing else."""
    check_enumeration_cap(g)
    return tuple(iter_matchings(g, distinct_pairs=True))


def require_matching_covered(g: Graph, notion: str) -> None:
    if not covered(g):
        raise DomainError(f"{notion} cuts are defined for matching covered graphs only")


def shore_mask(g: Graph, x: Shore) -> int:
    if x.order != g.n:
        raise InputError(f"Shore belongs to a graph on {x.order} vertices, not {g.n}")
    return x.mask


def crossing_counts(g: Graph, mask: int) -> list[int]:
    """|M ∩ ∂(X)| for every perfect matching M (by distinct pairs)."""
    pairs = g.pairs
    counts = []
    for matching in matched_pairs(g):
        count = 0
        for k in matching:
            u, v = pairs[k]
            if (mask >> u & 1) != (mask >> v & 1):
                count += 1
        counts.append(count)
    return counts


def tight_by_matchings(g: Graph, mask: int) -> bool:
    """Every perfect matching crosses ∂(X) exactly once (no coverage check)."""
    counts = crossing_counts(g, mask)
    return bool(counts) and all(c == 1 for c in counts)


def is_tight_definitional(g: Graph, x: Shore) -> bool:
    """|C ∩ M| = 1 for every perfect matching M."""
    require_matching_covered(g, "Tight")
    return tight_by_matchings(g, shore_mask(g, x))


def tight_by_parts(g: BipartiteGraph, mask: int) -> bool:
    """Both clauses of the bipartite tight-cut characterization, read literally.

    1. ||X ∩ A| - |X ∩ B|| = 1
    2. E[X ∩ A, X̄ ∩ B] = ∅ when X has one more B-vertex, E[X ∩ B, X̄ ∩ A] = ∅ when
       it has one more A-vertex.
    """
    if mask.bit_count() % 2 == 0:
        return False
    xa, xb = mask & g.a_mask, mask & g.b_mask
    diff = xa.bit_count() - xb.bit_count()
    if diff == -1:
        # N(X ∩ A) ⊆ X  ⟺  E[X ∩ A, X̄ ∩ B] = ∅
        return not neighborhood_mask(g, xa) & ~mask
    if diff == 1:
        return not neighborhood_mask(g, xb) & ~mask
    return False


def is_tight_bipartite(g: BipartiteGraph, x: Shore) -> bool:
    if not isinstance(g, BipartiteGraph):
        raise InputError("The bipartite tight-cut characterization needs a bipartite host")
    require_matching_covered(g, "Tight")
    return tight_by_parts(g, shore_mask(g, x))
