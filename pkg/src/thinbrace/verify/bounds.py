"""Exact bound values used by the theorem checks."""

from collections.abc import Iterable
from fractions import Fraction

HELU_RATIO_LIMIT = Fraction(2, 5)
MIN_CUBIC_IN_PLANAR_BRACE = 8


def helu_bound(n: int, n3: int) -> Fraction:
    """Guaranteed number of thin edges: n - 5/2·n3 + 1, i.e. (2 - 5k)/2·n + 1 with k = n3/n."""
    return Fraction(n) - Fraction(5, 2) * n3 + 1


def cubic_ratio(n: int, n3: int) -> Fraction:
    return Fraction(n3, n)


def helu_applicable(n: int, n3: int) -> bool:
    """k < 2/5."""
    return n > 0 and cubic_ratio(n, n3) < HELU_RATIO_LIMIT


def nonthin_s1_limit(n: int) -> int:
    return n - 9


def degree_sum_chain(n: int, m: int, n3: int) -> tuple[bool, bool]:
    """(4n - n3 ≤ 2m, 2m ≤ 4n - 8), checked separately."""
    return 4 * n - n3 <= 2 * m, 2 * m <= 4 * n - 8


def bound_value_violations(
    ns: Iterable[int], min_cubic: int = MIN_CUBIC_IN_PLANAR_BRACE
) -> list[tuple[int, int]]:
    """(n, n3) pairs with n3 ≥ 8 where the guaranteed bound exceeds n - 19.

    Also reports n where the bound at n3 = 8 differs from n - 19.
    """
    failures = []
    for n in ns:
        if helu_bound(n, min_cubic) != n - 19:
            failures.append((n, min_cubic))
        for n3 in range(min_cubic, n + 1):
            if helu_bound(n, n3) > n - 19:
                failures.append((n, n3))
    return failures
