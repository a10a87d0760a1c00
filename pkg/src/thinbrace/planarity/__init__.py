"""Planarity decision, the bipartite edge bound and Euler's formula."""

from thinbrace.planarity.embedding import (
    PlanarityVerdict,
    bipartite_edge_bound,
    euler_check,
    face_lengths,
    is_planar,
    trace_faces,
)
from thinbrace.planarity.kuratowski import brute_force_planar, find_kuratowski_subgraph

__all__ = [
    "PlanarityVerdict",
    "bipartite_edge_bound",
    "brute_force_planar",
    "euler_check",
    "face_lengths",
    "find_kuratowski_subgraph",
    "is_planar",
    "trace_faces",
]
