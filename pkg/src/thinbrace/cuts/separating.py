"""Separating-cut decisions: via C-contractions and via perfect matchings."""

import logging

from thinbrace.cuts.tight import (
    covered,
    matched_pairs,
    require_matching_covered,
    shore_mask,
)
from thinbrace.graph.model import Graph, Shore
from thinbrace.graph.ops import contract_mask

logger = logging.getLogger("thinbrace")


def is_separating_contraction(g: Graph, x: Shore) -> bool:
    """Both C-contractions G/X and G/X̄ are matching covered."""
    require_matching_covered(g, "Separating")
    mask = shore_mask(g, x)
    inner = contract_mask(g, mask, "x")
    outer = contract_mask(g, g.full_mask & ~mask, "x̄")
    return covered(inner) and covered(outer)


def is_separating_matchingwise(g: Graph, x: Shore) -> bool:
    """Every edge lies in some perfect matching crossing ∂(X) exactly once.

    Parallel edges share their endpoint pair, so the search runs over
    distinct matched pairs.
    """
    require_matching_covered(g, "Separating")
    mask = shore_mask(g, x)
    pairs = g.pairs
    reached: set[tuple[int, int]] = set()
    for matching in matched_pairs(g):
        crossing = 0
        for k in matching:
            u, v = pairs[k]
            if (mask >> u & 1) != (mask >> v & 1):
                crossing += 1
        if crossing == 1:
            reached.update(pairs[k] for k in matching)
    return all(pair in reached for pair in pairs)
