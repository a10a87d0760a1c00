"""Named graphs, canonical forms and orderly enumeration."""

from thinbrace.generate.canonical import CanonicalForm, canonical_form
from thinbrace.generate.enumerate import (
    BRACES,
    PLANAR_BRACES,
    EdgeRule,
    GenFilter,
    enumerate_bipartite,
)
from thinbrace.generate.named import named_general_graph, named_graph

__all__ = [
    "BRACES",
    "PLANAR_BRACES",
    "CanonicalForm",
    "EdgeRule",
    "GenFilter",
    "canonical_form",
    "enumerate_bipartite",
    "named_general_graph",
    "named_graph",
]
