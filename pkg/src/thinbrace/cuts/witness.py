"""Search for a matching covered graph with a nontrivial separating cut that is not tight."""

import logging
from collections.abc import Iterator

from thinbrace.config import settings
from thinbrace.cuts.shores import enumerate_odd_shores
from thinbrace.cuts.tight import covered
from thinbrace.cuts.verdict import cut_verdict
from thinbrace.errors import ResourceError
from thinbrace.graph.model import Graph, Shore

logger = logging.getLogger("thinbrace")


def _candidates(n: int) -> Iterator[Graph]:
    """Census bipartite graphs of order n first, then the general catalogue."""
    from thinbrace.generate.enumerate import GenFilter, enumerate_bipartite
    from thinbrace.generate.named import NAMED_GENERAL_GRAPHS, named_general_graph

    yield from enumerate_bipartite(n // 2, n // 2, GenFilter(require_matching_covered=True))
    for name in NAMED_GENERAL_GRAPHS:
        g = named_general_graph(name)
        if g.n == n and covered(g):
            yield g


def find_separating_not_tight(max_n: int | None = None) -> tuple[Graph, Shore] | None:
    """Smallest-order witness in deterministic search order, or None up to ``max_n``.

    Bipartite matching covered graphs never qualify (their separating cuts are
    tight) but are searched anyway; the witness comes from the general catalogue.
    """
    max_n = settings.witness_max_n if max_n is None else max_n
    if max_n > settings.enumeration_cap:
        raise ResourceError("separating-cut witness search", max_n, settings.enumeration_cap)
    for n in range(2, max_n + 1, 2):
        for g in _candidates(n):
            for shore in enumerate_odd_shores(g):
                if shore.trivial:
                    continue
                verdict = cut_verdict(g, shore)
                if verdict.separating and not verdict.tight and verdict.method_agreement:
                    logger.info(
                        "Separating non-tight cut in %s with shore %s",
                        g.name or "graph",
                        verdict.shore.members(g),
                    )
                    return g, verdict.shore
    return None
