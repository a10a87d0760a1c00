"""Odd shores, tight and separating cuts."""

from thinbrace.cuts.separating import is_separating_contraction, is_separating_matchingwise
from thinbrace.cuts.shores import enumerate_odd_shores
from thinbrace.cuts.tight import is_tight_bipartite, is_tight_definitional
from thinbrace.cuts.verdict import CutVerdict, cut_verdict, list_cuts
from thinbrace.cuts.witness import find_separating_not_tight

__all__ = [
    "CutVerdict",
    "cut_verdict",
    "enumerate_odd_shores",
    "find_separating_not_tight",
    "is_separating_contraction",
    "is_separating_matchingwise",
    "is_tight_bipartite",
    "is_tight_definitional",
    "list_cuts",
]
