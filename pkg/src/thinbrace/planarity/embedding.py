"""Planarity decision with a rotation system, face tracing and the Euler check."""

import logging
from dataclasses import dataclass

import networkx as nx

from thinbrace.errors import InputError
from thinbrace.graph.model import BipartiteGraph, Graph
from thinbrace.graph.ops import is_connected
from thinbrace.planarity.kuratowski import kuratowski_type

logger = logging.getLogger("thinbrace")

Rotation = tuple[tuple[str, tuple[str, ...]], ...]


@dataclass(frozen=True, slots=True)
class PlanarityVerdict:
    """Planarity of the underlying simple graph.

    ``embedding`` lists, per vertex, its neighbours in clockwise order.
    ``certificate`` is a Kuratowski subgraph when the graph is not planar.
    """

    planar: bool
    embedding: Rotation | None = None
    face_count: int | None = None
    certificate: tuple[tuple[str, str], ...] | None = None
    certificate_type: str | None = None

    def rotation(self) -> dict[str, tuple[str, ...]]:
        if self.embedding is None:
            raise InputError("Verdict carries no embedding")
        return dict(self.embedding)


def _simple(g: Graph) -> nx.Graph:
    if isinstance(g, BipartiteGraph):
        return g.to_networkx()
    return g.to_networkx(simple=True)


def simple_edge_count(g: Graph) -> int:
    return g.m if isinstance(g, BipartiteGraph) else len(g.simple_pairs())


def trace_faces(rotation: dict[str, tuple[str, ...]]) -> list[list[str]]:
    """Faces of a rotation system as closed walks of vertices.

    Half-edge (v, w) is followed by (w, x) with x the neighbour preceding v in
    the clockwise order around w.
    """
    position = {
        (v, w): i for v, neighbours in rotation.items() for i, w in enumerate(neighbours)
    }
    faces = []
    seen = set()
    for v, neighbours in rotation.items():
        for w in neighbours:
            if (v, w) in seen:
                continue
            face = []
            half = (v, w)
            while half not in seen:
                seen.add(half)
                tail, head = half
                face.append(tail)
                around = rotation[head]
                half = (head, around[position[(head, tail)] - 1])
            faces.append(face)
    return faces


def is_planar(g: Graph) -> PlanarityVerdict:
    """Decide planarity via the left-right test; planar verdicts carry a rotation system."""
    graph = _simple(g)
    planar, result = nx.check_planarity(graph, counterexample=True)
    label = g.vertices
    if not planar:
        certificate = tuple(
            sorted((label[min(u, v)], label[max(u, v)]) for u, v in result.edges())
        )
        kind = kuratowski_type(result.edges())
        if kind is None:
            logger.error("Non-planarity certificate of %s is not a Kuratowski subdivision", g.name)
        return PlanarityVerdict(planar=False, certificate=certificate, certificate_type=kind)

    embedding = tuple(
        (label[v], tuple(label[w] for w in result.neighbors_cw_order(v))) for v in range(g.n)
    )
    face_count = None
    if is_connected(g):
        face_count = len(trace_faces(dict(embedding))) if simple_edge_count(g) else 1
    return PlanarityVerdict(planar=True, embedding=embedding, face_count=face_count)


def _require_embedding(verdict: PlanarityVerdict, g: Graph) -> dict[str, tuple[str, ...]]:
    if not verdict.planar or verdict.embedding is None:
        raise InputError("An embedding is needed; the verdict is not planar")
    if not is_connected(g):
        raise InputError("Euler's formula is checked on connected graphs only")
    return verdict.rotation()


def euler_check(verdict: PlanarityVerdict, g: Graph) -> bool:
    """n - m + f = 2 with f recomputed from the rotation system."""
    rotation = _require_embedding(verdict, g)
    m = simple_edge_count(g)
    faces = len(trace_faces(rotation)) if m else 1
    return g.n - m + faces == 2


def face_lengths(verdict: PlanarityVerdict, g: Graph) -> list[int]:
    """Boundary walk length of every face, longest first."""
    rotation = _require_embedding(verdict, g)
    return sorted((len(face) for face in trace_faces(rotation)), reverse=True)


def bipartite_edge_bound(g: BipartiteGraph) -> bool:
    """m ≤ 2n - 4 for a connected bipartite graph on at least 3 vertices."""
    if not isinstance(g, BipartiteGraph):
        raise InputError("The edge bound applies to bipartite graphs")
    if g.n < 3:
        raise InputError(f"The edge bound needs n ≥ 3, got n={g.n}")
    if not is_connected(g):
        raise InputError("The edge bound needs a connected graph")
    return g.m <= 2 * g.n - 4
