"""Structural statements about braces: the neighbourhood corollary, the S1 forest,
and the pairwise S-cut diagnostic."""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from thinbrace.brace.recognition import brace_quick
from thinbrace.brace.thin import EdgeThinness, classify_edges_thin
from thinbrace.config import settings
from thinbrace.errors import DomainError, ResourceError
from thinbrace.graph.model import BipartiteGraph
from thinbrace.graph.ops import neighborhood_mask
from thinbrace.utils.bitset import submasks

logger = logging.getLogger("thinbrace")


@dataclass(frozen=True, slots=True)
class S1Subgraph:
    s1: tuple[str, ...]
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    is_forest: bool

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True, slots=True)
class LemmaDiagnostic:
    vertex: str
    edges: tuple[tuple[str, str], tuple[str, str]]
    shore_x: tuple[str, ...]
    shore_y: tuple[str, ...]
    outside_both: int

    @property
    def holds(self) -> bool:
        return self.outside_both <= 1


def verify_cor1(g: BipartiteGraph, cap: int | None = None) -> bool:
    """Check the neighbourhood corollary on every X with |X ∩ B| ≤ |B| - 2 and N(X ∩ B) ⊆ X ∩ A.

    |X ∩ A| = |X ∩ B| must force X = ∅, and |X ∩ A| = |X ∩ B| + 1 must force X ∩ B = ∅.
    """
    cap = settings.cor1_cap if cap is None else cap
    if g.n > cap:
        raise ResourceError("corollary subset sweep", g.n, cap)
    if not brace_quick(g):
        raise DomainError("The corollary is stated for braces")
    violations = 0
    for xb in submasks(g.b_mask):
        nb = xb.bit_count()
        if nb > g.b - 2:
            continue
        forced = neighborhood_mask(g, xb)
        for extra in submasks(g.a_mask & ~forced):
            xa = forced | extra
            na = xa.bit_count()
            if na == nb and (xa or xb):
                violations += 1
            elif na == nb + 1 and xb:
                violations += 1
    if violations:
        logger.error("Corollary fails on %s for %d sets", g.name or "graph", violations)
    return violations == 0


def s1_mask(g: BipartiteGraph) -> int:
    mask = 0
    for v in range(g.n):
        if g.degree(v) >= 4:
            mask |= 1 << v
    return mask


def s1_nonthin_subgraph(
    g: BipartiteGraph, thinness: list[EdgeThinness] | None = None
) -> S1Subgraph:
    """Graph spanned by the nonthin edges with both ends of degree ≥ 4, and whether it is a forest."""
    if thinness is None:
        thinness = classify_edges_thin(g)
    s1 = s1_mask(g)
    chosen = []
    for verdict in thinness:
        u, v = g.pairs[verdict.edge_index]
        if not verdict.thin and s1 >> u & 1 and s1 >> v & 1:
            chosen.append((u, v))
    spanned = sorted({w for pair in chosen for w in pair})
    forest = True
    if chosen:
        forest = nx.is_forest(nx.Graph(chosen))
    return S1Subgraph(
        s1=g.ids(s1),
        vertices=tuple(g.vertices[w] for w in spanned),
        edges=tuple((g.vertices[u], g.vertices[v]) for u, v in chosen),
        is_forest=forest,
    )


def lemma_diagnostics(
    g: BipartiteGraph, thinness: list[EdgeThinness] | None = None
) -> list[LemmaDiagnostic]:
    """For u ∈ S1 ∩ A on two nonthin edges, measure |X̄ ∩ Ȳ| over every pair of their S-cuts.

    Shores are oriented to contain u. B-side vertices are measured on
    ``g.swapped()``. Reported, never asserted.
    """
    if thinness is None:
        thinness = classify_edges_thin(g)
    s1 = s1_mask(g)
    full = g.full_mask
    records = []
    for u in range(g.a):
        if not s1 >> u & 1:
            continue
        nonthin = [t for t in thinness if not t.thin and u in g.pairs[t.edge_index]]
        for first, second in combinations(nonthin, 2):
            for x in first.s_cuts:
                for y in second.s_cuts:
                    xm, ym = x.oriented_to(u).mask, y.oriented_to(u).mask
                    outside = (full & ~xm & ~ym).bit_count()
                    record = LemmaDiagnostic(
                        vertex=g.vertices[u],
                        edges=(first.edge, second.edge),
                        shore_x=g.ids(xm),
                        shore_y=g.ids(ym),
                        outside_both=outside,
                    )
                    if not record.holds:
                        logger.warning("S-cut pair diagnostic exceeded at %s: %s", record.vertex, record)
                    records.append(record)
    return records
