"""Tests for perfect matchings and the matching-covered test."""

from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from thinbrace.errors import InputError, ResourceError
from thinbrace.graph.model import BipartiteGraph, MultiGraph
from thinbrace.graph.ops import contract_shore
from thinbrace.matching.augmenting import library_has_perfect_matching
from thinbrace.matching.coverage import (
    PerfectMatching,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
)
from thinbrace.matching.engine import count_matchings, find_matching
from tests.conftest import k33_minus_edge


def ryser_permanent(matrix: np.ndarray) -> int:
    """Permanent by Ryser's inclusion-exclusion formula."""
    n = matrix.shape[0]
    total = 0
    for subset in range(1, 1 << n):
        cols = [j for j in range(n) if subset >> j & 1]
        row_sums = matrix[:, cols].sum(axis=1)
        total += (-1) ** (n - len(cols)) * int(np.prod(row_sums, dtype=np.int64))
    return total


def biadjacency(g: BipartiteGraph) -> np.ndarray:
    matrix = np.zeros((g.a, g.b), dtype=np.int64)
    for i, j in g.edges:
        matrix[i, j] = 1
    return matrix


balanced_graphs = st.integers(min_value=1, max_value=6).flatmap(
    lambda a: st.lists(st.integers(0, (1 << a) - 1), min_size=a, max_size=a).map(
        lambda cols: BipartiteGraph.from_columns(a, cols)
    )
)


# --- Existence ---


class TestHasPerfectMatching:
    def test_c4(self, c4):
        assert has_perfect_matching(c4)

    def test_path_of_length_three(self, path4):
        assert has_perfect_matching(path4)

    def test_odd_order(self):
        k23 = BipartiteGraph.from_columns(2, [0b11, 0b11, 0b11])
        assert not has_perfect_matching(k23)

    def test_vertex_deleted(self, k33):
        assert not has_perfect_matching(k33, k33.full_mask & ~1)

    def test_blossom_agrees_with_backtracking_on_contractions(self, k33, q3):
        from thinbrace.cuts.shores import enumerate_odd_shores

        for g in (k33, q3):
            for shore in enumerate_odd_shores(g, min_side=3):
                h = contract_shore(g, shore)
                assert library_has_perfect_matching(h) == (find_matching(h) is not None)


# --- Enumeration ---


class TestEnumeratePerfectMatchings:
    def test_known_counts(self, c4, k33, q3):
        assert len(enumerate_perfect_matchings(c4)) == 2
        assert len(enumerate_perfect_matchings(k33)) == 6
        assert len(enumerate_perfect_matchings(q3)) == 9

    def test_cube_count_is_permanent(self, q3):
        assert ryser_permanent(biadjacency(q3)) == 9

    def test_lexicographic_order(self, k33):
        found = [m.edges for m in enumerate_perfect_matchings(k33)]
        assert found == sorted(found)
        assert len(set(found)) == len(found)

    def test_each_is_perfect(self, q3):
        for matching in enumerate_perfect_matchings(q3):
            assert PerfectMatching.of(q3, matching.edges) == matching
            assert len(matching.edges) == q3.n // 2

    def test_cap(self, q3):
        with pytest.raises(ResourceError) as exc:
            enumerate_perfect_matchings(q3, cap=6)
        assert exc.value.cap == 6

    def test_parallel_edges_are_distinct_choices(self, c4):
        h = contract_shore(c4, ["a1", "b1", "a2"])
        assert count_matchings(h) == 2
        assert len(enumerate_perfect_matchings(h, distinct_pairs=True)) == 1

    def test_count_independent_of_vertex_order(self, k33):
        h = contract_shore(k33, ["a1", "b1", "a2"])
        last = h.n - 1
        flipped = MultiGraph(h.vertices[::-1], tuple((last - u, last - v) for u, v in h.edges))
        assert count_matchings(flipped) == count_matchings(h)

    @hsettings(max_examples=50, deadline=None)
    @given(balanced_graphs)
    def test_count_matches_ryser(self, g):
        assert count_matchings(g) == ryser_permanent(biadjacency(g))


class TestPerfectMatching:
    def test_rejects_repeated_vertex(self, c4):
        with pytest.raises(InputError):
            PerfectMatching.of(c4, (0, 1))

    def test_rejects_partial(self, c4):
        with pytest.raises(InputError):
            PerfectMatching.of(c4, (0,))

    def test_crossing(self, c4):
        matching = PerfectMatching.of(c4, (0, 3))
        assert matching.crossing(c4, c4.mask(["a1"])) == 1
        assert matching.labels(c4) == (("a1", "b1"), ("a2", "b2"))


# --- Coverage ---


class TestIsMatchingCovered:
    def test_path_of_length_three(self, path4):
        report = is_matching_covered(path4)
        assert not report.covered
        assert report.uncovered_edges == (("c", "b"),)

    def test_k33(self, k33):
        assert is_matching_covered(k33).covered

    def test_cube(self, q3):
        assert is_matching_covered(q3).covered

    def test_no_perfect_matching(self):
        g = BipartiteGraph.from_columns(2, [0b01, 0b01])
        report = is_matching_covered(g)
        assert not report.covered
        assert not report.has_perfect_matching
        assert len(report.uncovered_edges) == g.m

    def test_disconnected_not_covered(self):
        g = BipartiteGraph.from_edges(("a", "b"), ("x", "y"), [("a", "x"), ("b", "y")])
        report = is_matching_covered(g)
        assert report.has_perfect_matching
        assert not report.connected
        assert not report.covered

    def test_definitional_cross_check(self, q3, path4):
        for g in (q3, path4, k33_minus_edge()):
            in_some = set()
            for matching in enumerate_perfect_matchings(g):
                in_some.update(matching.edges)
            uncovered = set(is_matching_covered(g).uncovered_edges)
            for k in range(g.m):
                assert (k in in_some) == (g.edge_label(k) not in uncovered)

    def test_covered_implies_connected_even(self):
        for a, cols in product([2, 3], [[0b11, 0b11, 0b11], [0b01, 0b11]]):
            g = BipartiteGraph.from_columns(a, cols)
            if is_matching_covered(g).covered:
                assert g.n % 2 == 0
