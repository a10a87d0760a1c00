"""Tests for odd shores, tight and separating cuts, and the separating-cut witness."""

import pytest

from thinbrace.cuts.separating import is_separating_contraction, is_separating_matchingwise
from thinbrace.cuts.shores import enumerate_odd_shores
from thinbrace.cuts.tight import (
    crossing_counts,
    is_tight_bipartite,
    is_tight_definitional,
    tight_by_matchings,
)
from thinbrace.cuts.verdict import cut_verdict, list_cuts
from thinbrace.cuts.witness import find_separating_not_tight
from thinbrace.errors import DomainError, InputError, ResourceError
from thinbrace.generate.enumerate import GenFilter, enumerate_bipartite
from thinbrace.graph.model import BipartiteGraph, Shore
from thinbrace.utils.bitset import submasks


# --- Shore enumeration ---


class TestEnumerateOddShores:
    def test_counts(self, c4, k33, q3):
        assert len(list(enumerate_odd_shores(c4))) == 4
        assert len(list(enumerate_odd_shores(k33))) == 16
        assert len(list(enumerate_odd_shores(q3))) == 64

    def test_one_per_pair(self, q3):
        shores = list(enumerate_odd_shores(q3))
        assert all(s.mask & 1 for s in shores)
        assert all(s.odd for s in shores)
        assert len({s.mask for s in shores}) == len(shores)

    def test_odd_order_rejected(self):
        g = BipartiteGraph.from_columns(2, [0b11, 0b11, 0b11])
        with pytest.raises(InputError):
            list(enumerate_odd_shores(g))

    def test_cap(self, q3):
        with pytest.raises(ResourceError):
            list(enumerate_odd_shores(q3, cap=6))


# --- Tight cuts ---


class TestTightDefinitional:
    def test_trivial_cuts_are_tight(self, q3):
        for v in q3.vertices:
            assert is_tight_definitional(q3, Shore.of(q3, [v]))

    def test_all_a_shore(self, k33):
        assert not is_tight_definitional(k33, Shore.of(k33, ["a1", "a2", "a3"]))

    def test_mixed_shore(self, k33):
        assert not is_tight_definitional(k33, Shore.of(k33, ["a1", "b1", "a2"]))

    def test_requires_matching_covered(self, path4):
        with pytest.raises(DomainError):
            is_tight_definitional(path4, Shore.of(path4, ["a"]))


class TestTightBipartite:
    def test_trivial(self, k33):
        assert is_tight_bipartite(k33, Shore.of(k33, ["a1"]))

    def test_mixed_shore(self, k33):
        assert not is_tight_bipartite(k33, Shore.of(k33, ["a1", "a2", "b1"]))

    def test_balanced_shore(self, k33):
        assert not is_tight_bipartite(k33, Shore.of(k33, ["a1", "b1"]))

    def test_non_bipartite_host(self, prism):
        with pytest.raises(InputError):
            is_tight_bipartite(prism, Shore(1, prism.n))

    def test_tight_cut_in_non_brace(self):
        """C6 splits into a path a1 b1 a2 plus the rest; that cut is tight."""
        from thinbrace.generate.named import named_graph

        c6 = named_graph("c6")
        shore = Shore.of(c6, ["a1", "b1", "a2"])
        assert is_tight_definitional(c6, shore)
        assert is_tight_bipartite(c6, shore)


# --- Separating cuts ---


class TestSeparating:
    def test_trivial_shores(self, k33):
        for v in k33.vertices:
            shore = Shore.of(k33, [v])
            assert is_separating_contraction(k33, shore)
            assert is_separating_matchingwise(k33, shore)

    def test_c4_single_vertex(self, c4):
        assert is_separating_contraction(c4, Shore.of(c4, ["b2"]))

    def test_k33_mixed_shore_methods_agree(self, k33):
        shore = Shore.of(k33, ["a1", "b1", "a2"])
        assert is_separating_contraction(k33, shore) is False
        assert is_separating_matchingwise(k33, shore) is False

    def test_requires_matching_covered(self, path4):
        with pytest.raises(DomainError):
            is_separating_contraction(path4, Shore.of(path4, ["a"]))

    def test_triangle_shore_of_prism(self, prism):
        shore = Shore.of(prism, ["t0", "t1", "t2"])
        assert is_separating_contraction(prism, shore)
        assert is_separating_matchingwise(prism, shore)
        assert not is_tight_definitional(prism, shore)


class TestListCuts:
    def test_c4_all_trivial_tight(self, c4):
        assert len(list(list_cuts(c4, "tight"))) == 4
        assert list(list_cuts(c4, "tight", nontrivial_only=True)) == []

    def test_unknown_kind(self, c4):
        with pytest.raises(InputError):
            list(list_cuts(c4, "loose"))

    def test_verdict_shore_is_canonical(self, q3):
        verdict = cut_verdict(q3, Shore(0b11111110, 8))
        assert verdict.shore.mask == 1
        assert verdict.tight and verdict.separating and verdict.trivial


# --- Census equivalences ---


def _matching_covered_census(max_part: int):
    for a in range(1, max_part + 1):
        yield from enumerate_bipartite(a, a, GenFilter(require_matching_covered=True))


class TestCensusEquivalence:
    def test_tight_and_separating_methods_agree(self):
        """Over matching covered bipartite graphs with n ≤ 8 and every odd shore."""
        for g in _matching_covered_census(4):
            for shore in enumerate_odd_shores(g):
                verdict = cut_verdict(g, shore)
                assert verdict.method_agreement, (g.name, shore)
                assert verdict.consistent
                # bipartite separating cuts are tight
                assert verdict.separating == verdict.tight

    def test_crossing_parity(self):
        for g in _matching_covered_census(3):
            for shore in enumerate_odd_shores(g):
                assert all(c % 2 == 1 for c in crossing_counts(g, shore.mask))

    def test_even_shores_never_tight(self):
        for g in _matching_covered_census(3):
            for mask in submasks(g.full_mask):
                if mask and mask != g.full_mask and mask.bit_count() % 2 == 0:
                    assert not tight_by_matchings(g, mask)


# --- Witness search ---


class TestFindSeparatingNotTight:
    def test_none_up_to_four(self):
        assert find_separating_not_tight(4) is None

    def test_witness_found(self):
        found = find_separating_not_tight(6)
        assert found is not None
        g, shore = found
        assert g.name == "prism"
        assert shore.members(g) == ("t0", "t1", "t2")
        assert not shore.trivial
        assert is_separating_contraction(g, shore)
        assert is_separating_matchingwise(g, shore)
        assert not is_tight_definitional(g, shore)

    def test_deterministic(self):
        assert find_separating_not_tight(6) == find_separating_not_tight(6)

    def test_cap(self):
        with pytest.raises(ResourceError):
            find_separating_not_tight(40)
