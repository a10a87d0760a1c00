"""Brace recognition by three independent methods.

- tight_cut_free: matching covered and no nontrivial tight cut
- two_extendable: every two vertex-disjoint edges extend to a perfect matching
- neighborhood:  |N(X)| ≥ |X| + 2 for every X ⊆ A (and ⊆ B) with 1 ≤ |X| ≤ |part| - 2
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache
from itertools import combinations

from thinbrace.cuts.shores import odd_shore_masks
from thinbrace.cuts.tight import tight_by_parts
from thinbrace.errors import InputError
from thinbrace.graph.model import BipartiteGraph, Graph
from thinbrace.graph.ops import is_connected, neighborhood_mask
from thinbrace.matching.coverage import has_perfect_matching, is_matching_covered
from thinbrace.utils.bitset import submasks_of_size

logger = logging.getLogger("thinbrace")

MIN_ORDER_FOR_CHARACTERIZATIONS = 6


class BraceMethod(StrEnum):
    TIGHT_CUT_FREE = "tight_cut_free"
    TWO_EXTENDABLE = "two_extendable"
    NEIGHBORHOOD = "neighborhood"
    ALL = "all"


@dataclass(frozen=True, slots=True)
class Disqualifier:
    """Why a method rejected the graph: a tight cut, an edge pair, or a vertex set."""

    method: str
    reason: str
    vertices: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True, slots=True)
class BraceVerdict:
    is_brace: bool
    method_results: dict[str, bool] = field(default_factory=dict)
    disqualifier: Disqualifier | None = None

    @property
    def agreement(self) -> bool:
        return len(set(self.method_results.values())) <= 1


def is_path_of_length_three(g: BipartiteGraph) -> bool:
    if g.n != 4 or g.m != 3 or not is_connected(g):
        return False
    return sorted(g.degree(v) for v in range(g.n)) == [1, 1, 2, 2]


def _not_covered(g: BipartiteGraph, method: str) -> Disqualifier | None:
    report = is_matching_covered(g)
    if report.covered:
        return None
    if not report.connected:
        return Disqualifier(method, "graph is not connected")
    if not report.has_perfect_matching:
        return Disqualifier(method, "graph has no perfect matching")
    return Disqualifier(
        method, "edge lies in no perfect matching", edges=report.uncovered_edges[:1]
    )


def tight_cut_free(g: BipartiteGraph) -> tuple[bool, Disqualifier | None]:
    method = BraceMethod.TIGHT_CUT_FREE.value
    reason = _not_covered(g, method)
    if reason:
        return False, reason
    for mask in odd_shore_masks(g.n, min_side=3):
        if tight_by_parts(g, mask):
            return False, Disqualifier(method, "nontrivial tight cut", vertices=g.ids(mask))
    return True, None


def two_extendable(g: BipartiteGraph) -> tuple[bool, Disqualifier | None]:
    method = BraceMethod.TWO_EXTENDABLE.value
    if not is_connected(g):
        return False, Disqualifier(method, "graph is not connected")
    if not has_perfect_matching(g):
        return False, Disqualifier(method, "graph has no perfect matching")
    full = g.full_mask
    pairs = g.pairs
    for k1, k2 in combinations(range(g.m), 2):
        (u1, v1), (u2, v2) = pairs[k1], pairs[k2]
        ends = 1 << u1 | 1 << v1 | 1 << u2 | 1 << v2
        if ends.bit_count() < 4:
            continue  # adjacent edges are not quantified over
        if not has_perfect_matching(g, full & ~ends):
            return False, Disqualifier(
                method,
                "disjoint edges do not extend to a perfect matching",
                edges=(g.edge_label(k1), g.edge_label(k2)),
            )
    return True, None


def neighborhood_condition(g: BipartiteGraph) -> tuple[bool, Disqualifier | None]:
    method = BraceMethod.NEIGHBORHOOD.value
    reason = _not_covered(g, method)
    if reason:
        return False, reason
    for part in (g.a_mask, g.b_mask):
        size = part.bit_count()
        for k in range(1, size - 1):
            for xs in submasks_of_size(part, k):
                if neighborhood_mask(g, xs).bit_count() < k + 2:
                    return False, Disqualifier(
                        method, "|N(X)| < |X| + 2", vertices=g.ids(xs)
                    )
    return True, None


_METHODS = {
    BraceMethod.TIGHT_CUT_FREE: tight_cut_free,
    BraceMethod.TWO_EXTENDABLE: two_extendable,
    BraceMethod.NEIGHBORHOOD: neighborhood_condition,
}


def is_brace(g: Graph, method: BraceMethod | str = BraceMethod.ALL) -> BraceVerdict:
    """Decide whether g is a brace.

    For n < 6 only the tight_cut_free method applies (C4 is the smallest brace);
    asking for another method on such a graph is an input error. The path of
    length three is rejected outright.
    """
    if not isinstance(g, BipartiteGraph):
        raise InputError("Brace recognition needs a bipartite graph")
    method = BraceMethod(method)
    small = g.n < MIN_ORDER_FOR_CHARACTERIZATIONS
    if small and method in (BraceMethod.TWO_EXTENDABLE, BraceMethod.NEIGHBORHOOD):
        raise InputError(f"Method {method.value} needs at least six vertices, got n={g.n}")

    if is_path_of_length_three(g):
        reason = Disqualifier(method.value, "the path of length three is excluded")
        return BraceVerdict(False, {method.value: False}, reason)

    if method is BraceMethod.ALL:
        chosen = [BraceMethod.TIGHT_CUT_FREE]
        if not small:
            chosen += [BraceMethod.TWO_EXTENDABLE, BraceMethod.NEIGHBORHOOD]
    else:
        chosen = [method]

    results: dict[str, bool] = {}
    disqualifier = None
    for name in chosen:
        ok, reason = _METHODS[name](g)
        results[name.value] = ok
        disqualifier = disqualifier or reason

    verdict = BraceVerdict(results[chosen[0].value], results, disqualifier)
    if not verdict.agreement:
        logger.error("Brace methods disagree on %s: %s", g.name or "graph", results)
    return verdict


@lru_cache(maxsize=1024)
def brace_quick(g: BipartiteGraph) -> bool:
    """Single-method brace test used by filters and preconditions."""
    if g.n < MIN_ORDER_FOR_CHARACTERIZATIONS:
        return is_brace(g, BraceMethod.TIGHT_CUT_FREE).is_brace
    return is_brace(g, BraceMethod.NEIGHBORHOOD).is_brace
