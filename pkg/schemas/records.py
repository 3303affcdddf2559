"""
Result record schemas
Extremal records, claim verdicts, run manifests, asymptotic sandwich rows and
the error report emitted by the command-line surface
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from schemas.patterns import ForbiddenSpec

Outcome = Literal["verified-on-range", "vacuous-on-range", "counterexample", "small-n-exception"]

CLAIMS = ("th1a", "th1b", "th2", "th3", "conj1a", "conj1b", "conj2a", "conj2b")


class EnumerationCensus(BaseModel):
    """
    Counts collected while enumerating isomorphism classes of order n
    """
    generated: int = Field(ge=0, description="Classes of order n produced by the generator")
    admissible: int = Field(ge=0, description="Classes avoiding every forbidden pattern")
    selected: int = Field(ge=0, description="Admissible classes passing the connectivity filter")
    pruned: bool = Field(False, description="Generation only extended admissible parents")


class ExtremalRecord(BaseModel):
    """
    Maximum spectral radius over graphs of order n avoiding a ForbiddenSpec
    """
    n: int = Field(ge=1, le=10)
    spec: ForbiddenSpec
    connected_only: bool = False
    max_mu: float = Field(ge=0.0)
    witnesses: List[str] = Field(
        description="graph6 text of the canonical form of every graph within the witness tolerance of max_mu"
    )
    census: EnumerationCensus

    @model_validator(mode='after')
    def validate_witnesses(self):
        if not self.witnesses and self.census.selected:
            raise ValueError('an extremal record with selected graphs needs at least one witness')
        if not self.census.selected and (self.witnesses or self.max_mu != 0.0):
            raise ValueError('an empty selection has max_mu 0 and no witnesses')
        return self

    @staticmethod
    def cell_key(n: int, spec: ForbiddenSpec, connected_only: bool) -> str:
        return f"{n}|{spec.token()}|{int(connected_only)}"

    def key(self) -> str:
        """Cell identity used for resume-by-skip"""
        return self.cell_key(self.n, self.spec, self.connected_only)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 6,
                "spec": {"patterns": [{"kind": "path", "l": 4}]},
                "connected_only": False,
                "max_mu": 2.2360679775,
                "witnesses": ["EEC_"],
                "census": {"generated": 15, "admissible": 15, "selected": 15, "pruned": True}
            }
        }


class GVariantComparison(BaseModel):
    """
    g_l computed by forbidding {C_l, C_{l+1}} and by forbidding every
    C_p with p >= l
    """
    n: int
    l: int
    strict: ExtremalRecord
    relaxed: ExtremalRecord
    agree: bool = Field(description="Both variants give the same maximum within tolerance")


class PatternCheck(BaseModel):
    """
    Whether one graph contains one forbidden pattern
    """
    graph6: str
    pattern: str = Field(description="Pattern token, e.g. P5, C6 or C>=6")
    contains: bool


class ExceptionWitness(BaseModel):
    """
    Re-checkable graph for a claim violation at one order
    """
    graph6: str = Field(description="graph6 text of the canonical form")
    n: int
    mu: float
    threshold: float
    missing: List[str] = Field(
        default_factory=list,
        description="Patterns or trees of the conclusion that the graph avoids"
    )


class ClaimPoint(BaseModel):
    """
    Verification outcome of one claim at one order n
    """
    n: int = Field(ge=1)
    threshold: float = Field(description="Spectral radius threshold of the hypothesis")
    applicable: bool = Field(description="Order hypothesis of the statement is met")
    candidates: int = Field(ge=0, description="Graphs examined against the conclusion")
    above_threshold: int = Field(ge=0, description="Examined graphs whose mu meets the threshold")
    exceptions: int = Field(ge=0, description="Graphs meeting the threshold yet violating the conclusion")
    escaped: int = Field(0, ge=0, description="Graphs excused by the equality clause")
    outcome: Outcome
    witness: Optional[ExceptionWitness] = None


class ClaimVerdict(BaseModel):
    """
    Verdict for a theorem or conjecture part over a range of orders
    """
    claim: str = Field(description="One of th1a, th1b, th2, th3, conj1a, conj1b, conj2a, conj2b")
    k: int = Field(ge=1)
    n_from: int = Field(ge=1)
    n_to: int = Field(ge=1)
    outcome: Outcome
    exhaustive: bool = Field(False, description="All graphs were swept instead of the pruned family")
    connected_only: bool = Field(False, description="Only connected graphs were candidates")
    points: List[ClaimPoint] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_claim(self):
        if self.claim not in CLAIMS:
            raise ValueError(f'unknown claim {self.claim}')
        if self.outcome == "counterexample" and not any(p.witness for p in self.points):
            raise ValueError('a counterexample verdict must embed a witness')
        return self

    @property
    def is_counterexample(self) -> bool:
        return self.outcome == "counterexample"


class RunManifest(BaseModel):
    """
    Parameters and progress of a persisted extremal run
    """
    app_version: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    completed: List[str] = Field(default_factory=list, description="Record keys already written")
    census: Dict[str, EnumerationCensus] = Field(default_factory=dict)


class SandwichRow(BaseModel):
    """
    Position of a closed-form spectral radius between the asymptotic
    lower reference (k-1)/2 + sqrt(kn) and the upper reference k/2 + sqrt(kn)
    """
    n: int
    k: int
    family: Literal["snk", "snk-plus"]
    value: float
    lower_reference: float
    upper_reference: float
    distance: float = Field(description="value - lower_reference")
    below_upper: bool
    shrinking: Optional[bool] = Field(
        None,
        description="|distance| smaller than in the previous row of the same (k, family)"
    )


class ErrorReport(BaseModel):
    """
    Error report for domain failures
    """
    error: str = Field(
        description="Error type or category"
    )
    message: str = Field(
        description="Human-readable error message"
    )
    details: Optional[Dict[str, Any]] = Field(
        None,
        description="Additional error details"
    )

    class Config:
        json_schema_extra = {
            "examples": [
                {
                    "error": "Graph6LengthError",
                    "message": "order 4 needs 1 data characters, got 2"
                },
                {
                    "error": "PreconditionError",
                    "message": "bound_c4free: graph contains C4",
                    "details": {"operation": "bound_c4free"}
                }
            ]
        }
