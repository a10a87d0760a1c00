"""Brace recognition, thin-edge classification and brace structure checks."""

from thinbrace.brace.recognition import BraceMethod, BraceVerdict, Disqualifier, is_brace
from thinbrace.brace.structure import (
    LemmaDiagnostic,
    S1Subgraph,
    lemma_diagnostics,
    s1_nonthin_subgraph,
    verify_cor1,
)
from thinbrace.brace.thin import (
    EdgeThinness,
    classify_edges_thin,
    edge_thinness,
    find_s_cuts,
    s_cut_identity,
)

__all__ = [
    "BraceMethod",
    "BraceVerdict",
    "Disqualifier",
    "EdgeThinness",
    "LemmaDiagnostic",
    "S1Subgraph",
    "classify_edges_thin",
    "edge_thinness",
    "find_s_cuts",
    "is_brace",
    "lemma_diagnostics",
    "s1_nonthin_subgraph",
    "s_cut_identity",
    "verify_cor1",
]
