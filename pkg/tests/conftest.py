"""Shared fixtures for thinbrace tests.

Graphs are small and built in-process. The part-size-5 census sweeps are slow
and only run when THINBRACE_RUN_LONG_CENSUS is set.
"""

import pytest

from thinbrace.config import settings
from thinbrace.generate.named import named_general_graph, named_graph
from thinbrace.graph.model import BipartiteGraph


def k44_minus_matching(size: int) -> BipartiteGraph:
    """K4,4 without the edges a_i b_i for i < size."""
    columns = [0b1111 & ~(1 << j if j < size else 0) for j in range(4)]
    return BipartiteGraph.from_columns(4, columns, f"k44-{size}")


def k33_minus_edge() -> BipartiteGraph:
    g = named_graph("k3,3")
    return g.without_edge(0)


@pytest.fixture
def c4():
    return named_graph("c4")


@pytest.fixture
def path4():
    return named_graph("path4")


@pytest.fixture
def k33():
    return named_graph("k3,3")


@pytest.fixture
def k44():
    return named_graph("k4,4")


@pytest.fixture
def q3():
    return named_graph("q3")


@pytest.fixture
def heawood():
    return named_graph("heawood")


@pytest.fixture
def k5():
    return named_general_graph("k5")


@pytest.fixture
def prism():
    return named_general_graph("prism")


# --- Skip markers ---

requires_long_census = pytest.mark.skipif(
    not settings.run_long_census,
    reason="THINBRACE_RUN_LONG_CENSUS not set",
)


def nonthin_brace() -> BipartiteGraph:
    """5+5 brace whose edge u-b4 is nonthin: in G - u b4 the shore {u, a2, b1, b2, b3}
    is tight with both sides of size 5."""
    full = ["b1", "b2", "b3", "b4", "b5"]
    edges = [("u", b) for b in ("b1", "b2", "b3", "b4")]
    edges += [("a2", b) for b in ("b1", "b2", "b3")]
    edges += [(a, b) for a in ("a3", "a4", "a5") for b in full]
    return BipartiteGraph.from_edges(("u", "a2", "a3", "a4", "a5"), full, edges, "nonthin10")
