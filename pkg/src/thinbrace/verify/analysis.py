"""Single-graph analysis: invariants, brace status, planarity, thin edges and theorem flags.

Every flag is computed from the graph itself; none is derived from another flag.
"""

import logging
import time
from fractions import Fraction

from thinbrace.brace.recognition import MIN_ORDER_FOR_CHARACTERIZATIONS, BraceMethod, is_brace
from thinbrace.brace.structure import lemma_diagnostics, s1_nonthin_subgraph, verify_cor1
from thinbrace.brace.thin import classify_edges_thin
from thinbrace.errors import InputError, ResourceError
from thinbrace.generate.canonical import canonical_form
from thinbrace.graph.model import BipartiteGraph
from thinbrace.graph.ops import degree_profile, is_connected
from thinbrace.matching.coverage import check_enumeration_cap, is_matching_covered
from thinbrace.matching.engine import count_matchings
from thinbrace.planarity.embedding import bipartite_edge_bound, euler_check, is_planar
from thinbrace.verify.bounds import (
    MIN_CUBIC_IN_PLANAR_BRACE,
    cubic_ratio,
    degree_sum_chain,
    helu_applicable,
    helu_bound,
    nonthin_s1_limit,
)
from thinbrace.verify.models import AnalysisReport, FlagResult, fraction_text

logger = logging.getLogger("thinbrace")

FLAG_KEYS = (
    "t1",
    "t2",
    "chain_lower",
    "chain_upper",
    "cor",
    "t3",
    "t4",
    "helu_t2",
    "helu_t3",
    "prop8",
    "cor1",
)


def _disqualifier_text(verdict) -> str | None:
    d = verdict.disqualifier
    if d is None:
        return None
    parts = [f"{d.method}: {d.reason}"]
    if d.vertices:
        parts.append("vertices " + " ".join(d.vertices))
    if d.edges:
        parts.append("edges " + " ".join(f"{u}-{v}" for u, v in d.edges))
    return "; ".join(parts)


def analyze(g: BipartiteGraph, timing: bool = True) -> AnalysisReport:
    """Build the full report; resource caps hit by one field are recorded, not raised."""
    if not isinstance(g, BipartiteGraph):
        raise InputError("Analysis needs a bipartite graph")
    start = time.perf_counter()
    errors: dict[str, str] = {}
    n, m = g.n, g.m
    profile = degree_profile(g)
    n3 = profile.n3

    try:
        form = canonical_form(g).hex()
    except ResourceError as exc:
        errors["canonical_form"] = str(exc)
        form = ""

    connected = is_connected(g)
    coverage = is_matching_covered(g)
    pm_count = None
    try:
        check_enumeration_cap(g)
        pm_count = count_matchings(g)
    except ResourceError as exc:
        errors["perfect_matching_count"] = str(exc)

    brace, methods, disqualifier = False, {}, None
    try:
        verdict = is_brace(g, BraceMethod.ALL)
        brace, methods = verdict.is_brace, dict(verdict.method_results)
        disqualifier = _disqualifier_text(verdict)
    except ResourceError as exc:
        errors["brace"] = str(exc)

    planarity = is_planar(g)
    euler = None
    if planarity.planar and connected:
        euler = euler_check(planarity, g)
    edge_bound = None
    if connected and n >= 3:
        edge_bound = bipartite_edge_bound(g)

    large_brace = brace and n >= MIN_ORDER_FOR_CHARACTERIZATIONS
    planar_brace = large_brace and planarity.planar
    k = cubic_ratio(n, n3) if n else Fraction(0)
    applicable = helu_applicable(n, n3)
    bound = helu_bound(n, n3)

    thinness = None
    if large_brace:
        try:
            thinness = classify_edges_thin(g)
        except ResourceError as exc:
            errors["thin"] = str(exc)

    report = AnalysisReport(
        name=g.name,
        canonical_form=form,
        n=n,
        m=m,
        part_sizes=[g.a, g.b],
        n3=n3,
        n3_even=n3 % 2 == 0,
        min_degree=profile.min_degree,
        max_degree=profile.max_degree,
        connected=connected,
        matching_covered=coverage.covered,
        uncovered_edges=[list(e) for e in coverage.uncovered_edges],
        perfect_matching_count=pm_count,
        brace=brace,
        brace_methods=methods,
        brace_disqualifier=disqualifier,
        planar=planarity.planar,
        face_count=planarity.face_count,
        euler=euler,
        edge_bound=edge_bound,
        edge_bound_equality=n >= 3 and m == 2 * n - 4,
        k=str(k),
        k_floor_ok=k >= Fraction(MIN_CUBIC_IN_PLANAR_BRACE, n) if planar_brace else None,
        helu_applicable=applicable,
        helu_bound=fraction_text(bound),
    )

    flags: dict[str, FlagResult] = {}
    not_planar_brace = "needs a planar brace on at least six vertices"
    not_brace = "needs a brace on at least six vertices"

    if planar_brace:
        flags["t1"] = FlagResult.of(n3 >= 1)
        flags["t2"] = FlagResult.of(n3 >= MIN_CUBIC_IN_PLANAR_BRACE)
        lower, upper = degree_sum_chain(n, m, n3)
        flags["chain_lower"] = FlagResult.of(lower)
        flags["chain_upper"] = FlagResult.of(upper)
    else:
        for key in ("t1", "t2", "chain_lower", "chain_upper"):
            flags[key] = FlagResult.skip(not_planar_brace)

    if planar_brace and n3 >= MIN_CUBIC_IN_PLANAR_BRACE:
        flags["t4"] = FlagResult.of(bound <= n - 19)
    else:
        flags["t4"] = FlagResult.skip("needs a planar brace with n3 ≥ 8")

    if thinness is not None:
        thin = [t for t in thinness if t.thin]
        nonthin = [t for t in thinness if not t.thin]
        s1 = s1_nonthin_subgraph(g, thinness)
        report.thin_count = len(thin)
        report.nonthin_count = len(nonthin)
        report.nonthin_edges = [list(t.edge) for t in nonthin]
        report.thin_ratio = str(Fraction(len(thin), n))
        report.s1 = list(s1.s1)
        report.s1_nonthin_edge_count = s1.edge_count
        report.forest = s1.is_forest
        diagnostics = lemma_diagnostics(g, thinness)
        report.lemma_diagnostics_exceeded = sum(1 for d in diagnostics if not d.holds)

        flags["helu_t2"] = FlagResult.of(s1.is_forest)
        flags["prop8"] = FlagResult.of(all(t.identity_holds for t in nonthin))
        if applicable:
            flags["helu_t3"] = FlagResult.of(len(thin) >= bound)
        else:
            flags["helu_t3"] = FlagResult.skip("needs n3/n < 2/5")
        if planar_brace and applicable:
            flags["t3"] = FlagResult.of(len(thin) >= bound)
        else:
            flags["t3"] = FlagResult.skip("needs a planar brace with n3/n < 2/5")
        if planar_brace:
            limit = nonthin_s1_limit(n)
            if s1.edge_count == 0:
                flags["cor"] = FlagResult.of(True, "no nonthin edge inside S1")
            else:
                flags["cor"] = FlagResult.of(s1.edge_count <= limit and s1.is_forest)
        else:
            flags["cor"] = FlagResult.skip(not_planar_brace)
    else:
        note = errors.get("thin", not_brace)
        for key in ("helu_t2", "prop8", "helu_t3", "t3", "cor"):
            flags[key] = FlagResult.skip(note)

    if brace:
        try:
            flags["cor1"] = FlagResult.of(verify_cor1(g))
        except ResourceError as exc:
            errors["cor1"] = str(exc)
            flags["cor1"] = FlagResult.skip(str(exc))
    else:
        flags["cor1"] = FlagResult.skip("needs a brace")

    report.flags = {key: flags[key] for key in FLAG_KEYS}
    report.errors = errors
    if timing:
        report.elapsed_seconds = round(time.perf_counter() - start, 6)
    failed = report.failed_flags()
    if failed:
        logger.error("Checks failed on %s: %s", g.name or form, ", ".join(failed))
    return report
