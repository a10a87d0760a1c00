"""Odd-shore enumeration, one shore per {X, X̄} pair."""

from collections.abc import Iterator
from itertools import combinations

from thinbrace.config import settings
from thinbrace.errors import InputError, ResourceError
from thinbrace.graph.model import Graph, Shore
from thinbrace.utils.bitset import mask_of


def odd_shore_masks(n: int, min_side: int = 1) -> Iterator[int]:
    """Masks of odd shores containing vertex 0 with both sides of size ≥ ``min_side``.

    Ordered by shore size, then lexicographically by member indices.
    """
    for size in range(1, n, 2):
        if size < min_side or n - size < min_side:
            continue
        for rest in combinations(range(1, n), size - 1):
            yield 1 | mask_of(rest)


def enumerate_odd_shores(
    g: Graph, min_side: int = 1, cap: int | None = None
) -> Iterator[Shore]:
    """Every odd shore pair {X, X̄} once, represented by the shore holding vertex 0."""
    if g.n % 2:
        raise InputError(f"Odd shores pair up only on even order, got n={g.n}")
    cap = settings.shore_cap if cap is None else cap
    if g.n > cap:
        raise ResourceError("odd-shore enumeration", g.n, cap)
    for mask in odd_shore_masks(g.n, min_side):
        yield Shore(mask, g.n)
