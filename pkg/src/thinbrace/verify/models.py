"""Report models serialized by the CLI."""

from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel


class Flag(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class FlagResult(BaseModel):
    status: Flag
    note: str | None = None

    @classmethod
    def of(cls, holds: bool, note: str | None = None) -> "FlagResult":
        return cls(status=Flag.PASS if holds else Flag.FAIL, note=note)

    @classmethod
    def skip(cls, note: str) -> "FlagResult":
        return cls(status=Flag.NOT_APPLICABLE, note=note)


def fraction_text(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return str(value)


# --- Single graph ---


class AnalysisReport(BaseModel):
    name: str | None = None
    canonical_form: str
    n: int
    m: int
    part_sizes: list[int]
    n3: int
    n3_even: bool
    min_degree: int
    max_degree: int
    connected: bool
    matching_covered: bool
    uncovered_edges: list[list[str]] = []
    perfect_matching_count: int | None = None
    brace: bool
    brace_methods: dict[str, bool] = {}
    brace_disqualifier: str | None = None
    planar: bool
    face_count: int | None = None
    euler: bool | None = None
    edge_bound: bool | None = None
    edge_bound_equality: bool = False
    thin_count: int | None = None
    nonthin_count: int | None = None
    nonthin_edges: list[list[str]] = []
    thin_ratio: str | None = None
    s1: list[str] = []
    s1_nonthin_edge_count: int | None = None
    forest: bool | None = None
    k: str
    k_floor_ok: bool | None = None
    helu_applicable: bool
    helu_bound: str | None = None
    lemma_diagnostics_exceeded: int | None = None
    flags: dict[str, FlagResult] = {}
    errors: dict[str, str] = {}
    elapsed_seconds: float | None = None

    def failed_flags(self) -> list[str]:
        return [key for key, flag in self.flags.items() if flag.status is Flag.FAIL]


# --- Cuts and thin edges ---


class CutEntry(BaseModel):
    shore: list[str]
    complement: list[str]
    tight: bool
    separating: bool
    trivial: bool
    method_agreement: bool


class CutReport(BaseModel):
    name: str | None = None
    kind: str
    nontrivial_only: bool = False
    cuts: list[CutEntry] = []


class ThinEntry(BaseModel):
    edge: list[str]
    thin: bool
    s_cuts: list[list[str]] = []
    g_minus_e_matching_covered: bool
    identity_holds: bool = True
    anomaly: str | None = None


class ThinReport(BaseModel):
    name: str | None = None
    edges: list[ThinEntry] = []
    thin_count: int
    nonthin_count: int
    s1_nonthin_edges: list[list[str]] = []
    s1_forest: bool


# --- Census ---


class Violation(BaseModel):
    check: str
    graph: str
    name: str | None = None
    detail: str


class CensusCell(BaseModel):
    a: int
    b: int
    graphs: int = 0
    braces: int = 0
    planar_braces: int = 0
    nonthin_edges: int = 0
    error: str | None = None


class CensusReport(BaseModel):
    a_max: int
    b_max: int
    planar_only: bool
    checks: list[str]
    cells: list[CensusCell] = []
    planar_braces: list[str] = []
    violations: list[Violation] = []
    elapsed_seconds: float | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def capped(self) -> bool:
        return any(cell.error for cell in self.cells)
