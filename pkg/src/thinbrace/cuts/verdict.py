"""Per-shore verdicts combining both tight tests and both separating tests."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from thinbrace.cuts.separating import is_separating_contraction, is_separating_matchingwise
from thinbrace.cuts.shores import enumerate_odd_shores
from thinbrace.cuts.tight import is_tight_bipartite, is_tight_definitional
from thinbrace.errors import InputError
from thinbrace.graph.model import BipartiteGraph, Graph, Shore

logger = logging.getLogger("thinbrace")


@dataclass(frozen=True, slots=True)
class CutVerdict:
    shore: Shore
    tight: bool
    separating: bool
    trivial: bool
    method_agreement: bool

    @property
    def consistent(self) -> bool:
        """tight ⟹ separating and trivial ⟹ separating."""
        return (not self.tight or self.separating) and (not self.trivial or self.separating)


def cut_verdict(g: Graph, x: Shore) -> CutVerdict:
    """Decide tightness and separation of ∂(X), cross-checking the independent methods.

    Bipartite hosts compare the definitional tight test with the bipartite
    characterization; contraction multigraphs use the definitional test alone.
    """
    shore = x.canonical()
    tight = is_tight_definitional(g, shore)
    agree = True
    if isinstance(g, BipartiteGraph):
        agree = tight == is_tight_bipartite(g, shore)
    separating = is_separating_contraction(g, shore)
    agree = agree and separating == is_separating_matchingwise(g, shore)
    verdict = CutVerdict(
        shore=shore,
        tight=tight,
        separating=separating,
        trivial=shore.trivial,
        method_agreement=agree,
    )
    if not agree or not verdict.consistent:
        logger.error(
            "Cut verdict disagreement on %s shore %s: %s",
            g.name or "graph",
            shore.members(g),
            verdict,
        )
    return verdict


def list_cuts(
    g: Graph, kind: str = "tight", nontrivial_only: bool = False
) -> Iterator[CutVerdict]:
    """Verdicts of the odd shores whose cut is of the requested kind, in shore order."""
    if kind not in ("tight", "separating"):
        raise InputError(f"Unknown cut kind: {kind}")
    for shore in enumerate_odd_shores(g):
        if nontrivial_only and shore.trivial:
            continue
        verdict = cut_verdict(g, shore)
        if getattr(verdict, kind):
            yield verdict
