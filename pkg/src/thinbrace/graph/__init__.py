"""Graph representation, neighbourhoods, cuts and shore contractions."""

from thinbrace.graph.model import BipartiteGraph, Graph, MultiGraph, Shore
from thinbrace.graph.ops import (
    DegreeProfile,
    contract_shore,
    degree_profile,
    edge_cut,
    is_connected,
    neighborhood,
)

__all__ = [
    "BipartiteGraph",
    "DegreeProfile",
    "Graph",
    "MultiGraph",
    "Shore",
    "contract_shore",
    "degree_profile",
    "edge_cut",
    "is_connected",
    "neighborhood",
]
