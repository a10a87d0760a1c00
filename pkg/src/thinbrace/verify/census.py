"""Census sweep: enumerate braces by part sizes and collect theorem-check violations."""

import logging
import time
from collections.abc import Iterable

from thinbrace.config import settings
from thinbrace.errors import InputError, ResourceError
from thinbrace.generate.enumerate import BRACES, PLANAR_BRACES, enumerate_bipartite
from thinbrace.graph.model import BipartiteGraph
from thinbrace.verify.analysis import analyze
from thinbrace.verify.models import (
    AnalysisReport,
    CensusCell,
    CensusReport,
    Flag,
    Violation,
)

logger = logging.getLogger("thinbrace")

PRIMARY_CHECKS = ("t1", "t2", "cor", "helu2", "helu3")
SUPPLEMENTARY_CHECKS = ("thin_pair", "thin_small", "prop8", "cor1", "brace_agreement")
ALL_CHECKS = PRIMARY_CHECKS + SUPPLEMENTARY_CHECKS

# census check -> report flags it asserts
CHECK_FLAGS = {
    "t1": ("t1",),
    "t2": ("t2", "chain_lower", "chain_upper"),
    "cor": ("cor",),
    "helu2": ("helu_t2",),
    "helu3": ("helu_t3",),
    "prop8": ("prop8",),
    "cor1": ("cor1",),
}

COR1_MAX_N = 10
THIN_SMALL_MAX_N = 8


def parse_checks(checks: str | Iterable[str] | None) -> list[str]:
    """Accept "all", a comma-separated string or an iterable of check names."""
    if checks is None:
        return list(ALL_CHECKS)
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    names = []
    for name in checks:
        if name == "all":
            names.extend(ALL_CHECKS)
        elif name in ALL_CHECKS:
            names.append(name)
        else:
            raise InputError(f"Unknown census check: {name!r} (known: {', '.join(ALL_CHECKS)})")
    return list(dict.fromkeys(names))


def _violation(check: str, g: BipartiteGraph, report: AnalysisReport, detail: str) -> Violation:
    return Violation(check=check, graph=report.canonical_form, name=g.name, detail=detail)


def check_graph(g: BipartiteGraph, report: AnalysisReport, checks: list[str]) -> list[Violation]:
    """Violations of the selected checks on one analysed graph."""
    found = []
    for check in checks:
        if check == "cor1" and g.n > COR1_MAX_N:
            continue
        for key in CHECK_FLAGS.get(check, ()):
            flag = report.flags[key]
            if flag.status is Flag.FAIL:
                found.append(_violation(check, g, report, f"{key} failed"))
    large = report.brace and g.n >= 6
    if "thin_pair" in checks and large and report.thin_count is not None:
        if report.thin_count < 2:
            found.append(_violation("thin_pair", g, report, f"{report.thin_count} thin edges"))
    if "thin_small" in checks and large and g.n <= THIN_SMALL_MAX_N and report.nonthin_count:
        found.append(
            _violation("thin_small", g, report, f"{report.nonthin_count} nonthin edges")
        )
    if "brace_agreement" in checks and len(set(report.brace_methods.values())) > 1:
        verdicts = ", ".join(f"{name}={verdict}" for name, verdict in report.brace_methods.items())
        found.append(
            _violation("brace_agreement", g, report, f"brace methods disagree: {verdicts}")
        )
    return found


def run_census(
    a_max: int,
    b_max: int,
    checks: str | Iterable[str] | None = None,
    jobs: int | None = None,
    planar_only: bool = False,
    timing: bool = True,
) -> CensusReport:
    """Sweep cells (a, b) with 1 ≤ a ≤ b, a ≤ a_max, b ≤ b_max.

    Cells over the generation cap, or whose graphs hit a cap during analysis,
    carry an error instead of being skipped silently.
    """
    selected = parse_checks(checks)
    if a_max < 1 or b_max < 1:
        raise InputError("Part-size bounds must be positive")
    start = time.perf_counter()
    jobs = settings.census_jobs if jobs is None else jobs
    filt = PLANAR_BRACES if planar_only else BRACES
    report = CensusReport(a_max=a_max, b_max=b_max, planar_only=planar_only, checks=selected)

    for a in range(1, a_max + 1):
        for b in range(a, b_max + 1):
            cell = CensusCell(a=a, b=b)
            report.cells.append(cell)
            try:
                graphs = list(enumerate_bipartite(a, b, filt, jobs))
            except ResourceError as exc:
                logger.warning("Census cell %dx%d skipped: %s", a, b, exc)
                cell.error = str(exc)
                continue
            errors: list[str] = []
            for g in graphs:
                cell.graphs += 1
                try:
                    analysis = analyze(g, timing=False)
                except Exception:
                    logger.exception("Analysis failed on %s", g.name)
                    report.violations.append(
                        Violation(check="error", graph=g.name or "", detail="analysis raised")
                    )
                    continue
                errors.extend(f"{g.name}: {k}: {v}" for k, v in analysis.errors.items())
                if analysis.brace:
                    cell.braces += 1
                cell.nonthin_edges += analysis.nonthin_count or 0
                if analysis.brace and analysis.planar:
                    cell.planar_braces += 1
                    if g.n >= 6:
                        report.planar_braces.append(analysis.canonical_form)
                report.violations.extend(check_graph(g, analysis, selected))
            if errors:
                cell.error = "; ".join(errors)
            logger.info(
                "Census cell %dx%d: %d graphs, %d braces, %d planar braces",
                a,
                b,
                cell.graphs,
                cell.braces,
                cell.planar_braces,
            )

    if report.violations:
        logger.error("Census found %d violations", len(report.violations))
    if timing:
        report.elapsed_seconds = round(time.perf_counter() - start, 3)
    return report
