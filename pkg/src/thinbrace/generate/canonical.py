"""Canonical forms of bipartite graphs up to part-preserving relabelling.

The form is the least sorted column tuple over all row (A-vertex) permutations.
It is found column by column: each chosen column splits the placed rows, so
only columns tied for the next value are branched on. When |A| = |B| the
transposed graph competes too, so part swaps are absorbed.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from thinbrace.errors import ResourceError
from thinbrace.graph.model import BipartiteGraph

SEARCH_BUDGET = 2_000_000  # search nodes

Columns = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """``bytes([a, b])`` followed by the b column masks, fixed width, big-endian."""

    data: bytes

    @classmethod
    def from_columns(cls, a: int, columns: Sequence[int]) -> "CanonicalForm":
        width = _width(a)
        body = b"".join(col.to_bytes(width, "big") for col in columns)
        return cls(bytes([a, len(columns)]) + body)

    @property
    def a(self) -> int:
        return self.data[0]

    @property
    def b(self) -> int:
        return self.data[1]

    def columns(self) -> Columns:
        width = _width(self.a)
        body = self.data[2:]
        return tuple(
            int.from_bytes(body[i : i + width], "big") for i in range(0, len(body), width)
        )

    def graph(self, name: str | None = None) -> BipartiteGraph:
        return BipartiteGraph.from_columns(self.a, self.columns(), name or self.hex())

    def hex(self) -> str:
        return self.data.hex()


def _width(a: int) -> int:
    return max(1, (a + 7) // 8)


def transpose(a: int, columns: Sequence[int]) -> Columns:
    """Columns of the graph with A and B exchanged."""
    return tuple(
        sum(1 << j for j, col in enumerate(columns) if col >> i & 1) for i in range(a)
    )


class _Smaller(Exception):
    """Raised once a relabelling below the target tuple is certain."""


# --- Search ---
#
# Columns are fixed one at a time, smallest value first. Placed rows form an
# ordered partition of the low positions: a chosen column takes the low end of
# every block it meets and its unplaced rows open a new block above them. Blocks
# stay uniform for every chosen column, so earlier values never change and only
# ties between columns need branching.


def _place(
    blocks: tuple[int, ...], placed: int, unplaced: int, col: int
) -> tuple[int, tuple[int, ...], int, int]:
    value = 0
    pos = 0
    split: list[int] = []
    for block in blocks:
        inside = block & col
        value |= ((1 << inside.bit_count()) - 1) << pos
        split.extend(part for part in (inside, block & ~col) if part)
        pos += block.bit_count()
    fresh = unplaced & col
    value |= ((1 << fresh.bit_count()) - 1) << placed
    if fresh:
        split.append(fresh)
    return value, tuple(split), placed + fresh.bit_count(), unplaced & ~col


def _least(
    a: int, columns: Sequence[int], best: Columns | None = None, strict: bool = False
) -> Columns | None:
    """Least sorted column tuple over row permutations, or ``best`` if none is lower.

    With ``strict`` the search raises ``_Smaller`` as soon as some branch is
    certain to undercut ``best``.
    """
    nodes = 0

    def visit(
        blocks: tuple[int, ...], placed: int, unplaced: int, remaining: Columns, seq: Columns
    ) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > SEARCH_BUDGET:
            raise ResourceError("canonical labelling search", nodes, SEARCH_BUDGET)
        if not remaining:
            if best is None or seq < best:
                best = seq
            return
        options = {col: _place(blocks, placed, unplaced, col) for col in set(remaining)}
        low = min(option[0] for option in options.values())
        head = (*seq, low)
        if best is not None:
            bound = best[: len(head)]
            if head > bound:
                return
            if strict and head < bound:
                raise _Smaller
        for col in sorted(options):
            value, split, now_placed, now_unplaced = options[col]
            if value != low:
                continue
            k = remaining.index(col)
            visit(split, now_placed, now_unplaced, remaining[:k] + remaining[k + 1 :], head)

    visit((), 0, (1 << a) - 1, tuple(sorted(columns)), ())
    return best


def _undercuts(a: int, columns: Sequence[int], target: Columns) -> bool:
    try:
        _least(a, columns, target, strict=True)
    except _Smaller:
        return True
    return False


def canonical_columns(a: int, columns: Sequence[int]) -> Columns:
    best = _least(a, columns)
    if a == len(columns):
        best = _least(a, transpose(a, columns), best)
    return best


def is_row_minimal(a: int, columns: Sequence[int]) -> bool:
    """True iff no row permutation gives a smaller sorted column tuple.

    Holds for every prefix of a row-minimal tuple, so generation can prune
    partial matrices with it.
    """
    return not _undercuts(a, columns, tuple(columns))


def is_canonical(a: int, columns: Columns) -> bool:
    """True iff the (sorted) column tuple is its own canonical encoding."""
    columns = tuple(columns)
    if _undercuts(a, columns, columns):
        return False
    return a != len(columns) or not _undercuts(a, transpose(a, columns), columns)


def canonical_form(g: BipartiteGraph) -> CanonicalForm:
    """Invariant under relabelling within parts and under part swap (smaller part first)."""
    if g.a > g.b:
        g = g.swapped()
    return CanonicalForm.from_columns(g.a, canonical_columns(g.a, g.columns))
