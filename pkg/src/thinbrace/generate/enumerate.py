"""Orderly enumeration of connected bipartite graphs, one per isomorphism class.

Graphs are grown as multisets of B-columns (A-masks) in nondecreasing order. A
prefix survives only while no row permutation sorts it lower, since a canonical
tuple has canonical prefixes; the full tuple must equal its canonical encoding,
so no store of seen graphs is needed.
"""

import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

from thinbrace.brace.recognition import brace_quick
from thinbrace.config import settings
from thinbrace.errors import InputError, ResourceError
from thinbrace.generate.canonical import CanonicalForm, is_canonical, is_row_minimal
from thinbrace.graph.model import BipartiteGraph
from thinbrace.matching.coverage import is_matching_covered
from thinbrace.planarity.embedding import is_planar
from thinbrace.utils.bitset import iter_bits

logger = logging.getLogger("thinbrace")


class EdgeRule(StrEnum):
    NONE = "none"
    BIPARTITE_PLANAR = "bipartite_planar"


@dataclass(frozen=True, slots=True)
class GenFilter:
    """Conjunctive filter on enumerated graphs."""

    min_degree: int = 1
    require_matching_covered: bool = False
    require_brace: bool = False
    require_planar: bool = False
    max_edges_rule: EdgeRule = EdgeRule.NONE

    def needs_perfect_matching(self) -> bool:
        return self.require_matching_covered or self.require_brace

    def effective_min_degree(self, n: int) -> int:
        """Degree floor implied by the filter: 3 in braces on ≥ 6 vertices, 2 in
        matching covered graphs on ≥ 4 vertices."""
        floor = self.min_degree
        if self.require_brace and n >= 6:
            floor = max(floor, 3)
        if self.needs_perfect_matching() and n >= 4:
            floor = max(floor, 2)
        return floor

    def edge_limit(self, n: int) -> int | None:
        if n >= 3 and (self.require_planar or self.max_edges_rule is EdgeRule.BIPARTITE_PLANAR):
            return 2 * n - 4
        return None


BRACES = GenFilter(require_brace=True)
PLANAR_BRACES = GenFilter(
    require_brace=True, require_planar=True, max_edges_rule=EdgeRule.BIPARTITE_PLANAR
)


def _columns_connected(a: int, columns: tuple[int, ...]) -> bool:
    """Connectivity of the bipartite graph given by its columns (no isolated rows)."""
    reached_rows = columns[0]
    pending = set(range(1, len(columns)))
    grew = True
    while grew and pending:
        grew = False
        for j in list(pending):
            if columns[j] & reached_rows:
                reached_rows |= columns[j]
                pending.discard(j)
                grew = True
    return not pending and reached_rows == (1 << a) - 1


def _row_degrees_ok(a: int, columns: tuple[int, ...], floor: int) -> bool:
    counts = [0] * a
    for col in columns:
        for i in iter_bits(col):
            counts[i] += 1
    return min(counts) >= floor


def _passes(g: BipartiteGraph, filt: GenFilter) -> bool:
    if filt.needs_perfect_matching() and not is_matching_covered(g).covered:
        return False
    if filt.require_brace and not brace_quick(g):
        return False
    if filt.require_planar and not is_planar(g).planar:
        return False
    return True


def _candidates(a: int, b: int, filt: GenFilter, prune: bool) -> list[int]:
    floor = filt.effective_min_degree(a + b) if prune else filt.min_degree
    return [mask for mask in range(1, 1 << a) if mask.bit_count() >= floor]


@dataclass(frozen=True, slots=True)
class _Plan:
    """Bounds shared by every prefix of one (a, b) sweep."""

    a: int
    b: int
    filt: GenFilter
    candidates: tuple[int, ...]
    floor: int
    limit: int | None

    @classmethod
    def build(cls, a: int, b: int, filt: GenFilter, prune: bool) -> "_Plan":
        n = a + b
        return cls(
            a=a,
            b=b,
            filt=filt,
            candidates=tuple(_candidates(a, b, filt, prune)),
            floor=filt.effective_min_degree(n) if prune else filt.min_degree,
            limit=filt.edge_limit(n) if prune else None,
        )

    def viable(self, columns: tuple[int, ...]) -> bool:
        """Whether some completion of the prefix can still be emitted."""
        left = self.b - len(columns)
        if self.limit is not None:
            if sum(col.bit_count() for col in columns) + left * self.floor > self.limit:
                return False
        counts = [0] * self.a
        for col in columns:
            for i in iter_bits(col):
                counts[i] += 1
        if min(counts) + left < self.floor:
            return False
        return is_row_minimal(self.a, columns)

    def accept(self, columns: tuple[int, ...]) -> bool:
        if not _row_degrees_ok(self.a, columns, self.floor):
            return False
        if not _columns_connected(self.a, columns):
            return False
        if not is_canonical(self.a, columns):
            return False
        return _passes(BipartiteGraph.from_columns(self.a, columns), self.filt)


def _grow(
    plan: _Plan, columns: tuple[int, ...], start: int, found: list[tuple[int, ...]]
) -> None:
    if len(columns) == plan.b:
        if plan.accept(columns):
            found.append(columns)
        return
    for index in range(start, len(plan.candidates)):
        grown = (*columns, plan.candidates[index])
        if plan.viable(grown):
            _grow(plan, grown, index, found)


def _seeds(plan: _Plan) -> list[tuple[tuple[int, ...], int]]:
    """Viable prefixes of up to two columns, in order, with their last candidate index."""
    seeds = []
    for i, first in enumerate(plan.candidates):
        head = (first,)
        if not plan.viable(head):
            continue
        if plan.b == 1:
            seeds.append((head, i))
            continue
        for j in range(i, len(plan.candidates)):
            pair = (first, plan.candidates[j])
            if plan.viable(pair):
                seeds.append((pair, j))
    return seeds


def _branch(
    a: int, b: int, filt: GenFilter, prefix: tuple[int, ...], start: int, prune: bool
) -> list[tuple[int, ...]]:
    """Canonical column tuples passing the filter that extend ``prefix``."""
    found: list[tuple[int, ...]] = []
    _grow(_Plan.build(a, b, filt, prune), prefix, start, found)
    return found


def enumerate_bipartite(
    a: int,
    b: int,
    filt: GenFilter | None = None,
    jobs: int | None = None,
    prune: bool = True,
) -> Iterator[BipartiteGraph]:
    """One connected graph per isomorphism class on parts of size a ≤ b passing ``filt``.

    Output is ordered by canonical form. ``prune=False`` drops the implied degree
    and edge-count prunes and only applies the filter itself.
    """
    filt = filt or GenFilter()
    if a < 1 or b < 1:
        raise InputError(f"Both parts need at least one vertex, got {a} and {b}")
    if a > b:
        raise InputError(f"Parts are enumerated with a ≤ b, got a={a}, b={b}")
    if a + b > settings.generation_cap:
        raise ResourceError("bipartite enumeration", a + b, settings.generation_cap)
    if prune and filt.needs_perfect_matching() and a != b:
        logger.debug("Skipping %dx%d: unbalanced parts have no perfect matching", a, b)
        return

    seeds = _seeds(_Plan.build(a, b, filt, prune))
    jobs = settings.census_jobs if jobs is None else jobs
    if jobs > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _branch,
                    *zip(*((a, b, filt, prefix, start, prune) for prefix, start in seeds)),
                )
            )
    else:
        results = [_branch(a, b, filt, prefix, start, prune) for prefix, start in seeds]

    # seeds ascend, so branch order is canonical order
    for found in results:
        for columns in found:
            form = CanonicalForm.from_columns(a, columns)
            yield BipartiteGraph.from_columns(a, columns, form.hex())
