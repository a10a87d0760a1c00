"""Bitset helpers: vertex subsets of graphs with at most 64 vertices are plain ints."""

from collections.abc import Iterable, Iterator
from itertools import combinations


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask`` including the empty set, in increasing order."""
    bits = list(iter_bits(mask))
    for pattern in range(1 << len(bits)):
        sub = 0
        for k, bit in enumerate(bits):
            if pattern >> k & 1:
                sub |= 1 << bit
        yield sub


def submasks_of_size(mask: int, size: int) -> Iterator[int]:
    """Subsets of ``mask`` with exactly ``size`` elements, lexicographic by index."""
    for combo in combinations(iter_bits(mask), size):
        yield mask_of(combo)
