"""Tests for bound arithmetic and the single-graph analysis report."""

from fractions import Fraction

import pytest

from tests.conftest import k44_minus_matching, nonthin_brace
from thinbrace.config import settings
from thinbrace.errors import InputError
from thinbrace.generate.canonical import canonical_form
from thinbrace.verify.analysis import FLAG_KEYS, analyze
from thinbrace.verify.bounds import (
    bound_value_violations,
    cubic_ratio,
    degree_sum_chain,
    helu_applicable,
    helu_bound,
    nonthin_s1_limit,
)
from thinbrace.verify.models import Flag, FlagResult


# --- Bounds ---


class TestBounds:
    def test_helu_bound(self):
        assert helu_bound(8, 8) == -11
        assert helu_bound(10, 0) == 11
        assert helu_bound(10, 3) == Fraction(7, 2)

    def test_cubic_ratio(self):
        assert cubic_ratio(10, 4) == Fraction(2, 5)

    def test_applicability_is_strict(self):
        assert helu_applicable(10, 3)
        assert not helu_applicable(10, 4)
        assert not helu_applicable(0, 0)

    def test_degree_sum_chain(self):
        assert degree_sum_chain(8, 12, 8) == (True, True)
        assert degree_sum_chain(8, 16, 0) == (True, False)
        assert degree_sum_chain(8, 11, 8) == (False, True)

    def test_bound_never_exceeds_n_minus_19(self):
        assert bound_value_violations(range(8, 1001)) == []

    def test_nonthin_limit(self):
        assert nonthin_s1_limit(20) == 11


class TestFlagResult:
    def test_of(self):
        assert FlagResult.of(True).status is Flag.PASS
        assert FlagResult.of(False, "why").note == "why"
        assert FlagResult.skip("n/a").status == "not_applicable"


# --- Analysis ---


class TestAnalyze:
    def test_cube(self, q3):
        report = analyze(q3, timing=False)
        assert report.canonical_form == canonical_form(q3).hex()
        assert report.part_sizes == [4, 4]
        assert (report.n, report.m, report.n3) == (8, 12, 8)
        assert report.n3_even
        assert report.brace and report.planar
        assert report.face_count == 6
        assert report.euler is True
        assert report.edge_bound is True
        assert report.edge_bound_equality
        assert report.perfect_matching_count == 9
        assert report.k == "1"
        assert report.k_floor_ok is True
        assert not report.helu_applicable
        assert report.helu_bound == "-11"
        assert report.thin_count == 12
        assert report.nonthin_count == 0
        assert report.elapsed_seconds is None

    def test_cube_flags(self, q3):
        flags = analyze(q3, timing=False).flags
        assert list(flags) == list(FLAG_KEYS)
        for key in ("t1", "t2", "chain_lower", "chain_upper", "t4", "helu_t2", "prop8", "cor1"):
            assert flags[key].status is Flag.PASS, key
        assert flags["cor"].status is Flag.PASS
        assert flags["cor"].note == "no nonthin edge inside S1"
        assert flags["t3"].status is Flag.NOT_APPLICABLE
        assert flags["helu_t3"].status is Flag.NOT_APPLICABLE

    def test_k44(self, k44):
        report = analyze(k44, timing=False)
        assert report.brace and not report.planar
        assert report.k == "0"
        assert report.helu_applicable
        assert report.helu_bound == "9"
        assert report.thin_count == 16
        assert report.thin_ratio == "2"
        assert report.edge_bound is False
        assert report.flags["helu_t3"].status is Flag.PASS
        assert report.flags["t1"].status is Flag.NOT_APPLICABLE
        assert report.failed_flags() == []

    def test_k44_minus_edge(self):
        report = analyze(k44_minus_matching(1), timing=False)
        assert report.n3 == 2
        assert report.helu_bound == "4"
        assert report.flags["helu_t3"].status is Flag.PASS

    def test_c4(self, c4):
        report = analyze(c4, timing=False)
        assert report.brace
        assert report.brace_methods == {"tight_cut_free": True}
        assert report.thin_count is None
        assert report.flags["helu_t2"].status is Flag.NOT_APPLICABLE
        assert report.flags["cor1"].status is Flag.PASS

    def test_path4(self, path4):
        report = analyze(path4, timing=False)
        assert not report.matching_covered
        assert report.uncovered_edges == [["c", "b"]]
        assert not report.brace
        assert "path of length three" in report.brace_disqualifier
        assert report.flags["cor1"].status is Flag.NOT_APPLICABLE

    def test_nonthin_brace(self):
        report = analyze(nonthin_brace(), timing=False)
        assert report.brace and not report.planar
        assert ["u", "b4"] in report.nonthin_edges
        assert report.nonthin_count >= 1
        assert report.flags["prop8"].status is Flag.PASS
        assert report.flags["cor1"].status is Flag.PASS

    def test_timing(self, c4):
        assert analyze(c4).elapsed_seconds is not None

    def test_deterministic(self, heawood):
        first = analyze(heawood, timing=False)
        assert first.model_dump() == analyze(heawood, timing=False).model_dump()

    def test_non_bipartite(self, prism):
        with pytest.raises(InputError):
            analyze(prism)

    def test_cor1_cap_recorded(self, q3, monkeypatch):
        monkeypatch.setattr(settings, "cor1_cap", 6)
        report = analyze(q3, timing=False)
        assert report.flags["cor1"].status is Flag.NOT_APPLICABLE
        assert "cor1" in report.errors

    def test_enumeration_cap_recorded(self, q3, monkeypatch):
        monkeypatch.setattr(settings, "enumeration_cap", 4)
        report = analyze(q3, timing=False)
        assert report.perfect_matching_count is None
        assert "perfect_matching_count" in report.errors
        assert report.brace
