"""Perfect matchings and the matching-covered test."""

from thinbrace.matching.coverage import (
    CoverageReport,
    PerfectMatching,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
)

__all__ = [
    "CoverageReport",
    "PerfectMatching",
    "enumerate_perfect_matchings",
    "has_perfect_matching",
    "is_matching_covered",
]
