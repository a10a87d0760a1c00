"""Theorem checks over single graphs and over the census."""

from thinbrace.verify.analysis import analyze
from thinbrace.verify.bounds import helu_bound
from thinbrace.verify.census import run_census
from thinbrace.verify.models import AnalysisReport, CensusReport, Flag, FlagResult

__all__ = [
    "AnalysisReport",
    "CensusReport",
    "Flag",
    "FlagResult",
    "analyze",
    "helu_bound",
    "run_census",
]
