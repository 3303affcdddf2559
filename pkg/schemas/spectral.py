"""
Pydantic schemas for spectral results and inequality reports
Covers the eigensolver output, named bound comparisons, the vertex-deletion
trace and the numeric sequence check
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config import settings


class SpectralResult(BaseModel):
    """
    Dominant adjacency eigenvalue with a unit principal eigenvector
    """
    mu: float = Field(
        ge=0.0,
        description="Largest eigenvalue of the adjacency matrix",
        examples=[3.0]
    )
    vector: List[float] = Field(
        description="Unit eigenvector to mu, nonnegative, supported on an extremal component"
    )
    residual: float = Field(
        ge=0.0,
        description="Infinity norm of A x - mu x"
    )
    iterations: int = Field(
        ge=0,
        description="Power iterations spent over all components"
    )

    @field_validator('vector')
    @classmethod
    def validate_vector(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError('eigenvector must have at least one entry')
        return v

    class Config:
        json_schema_extra = {
            "example": {
                "mu": 3.0,
                "vector": [0.5, 0.5, 0.5, 0.5],
                "residual": 0.0,
                "iterations": 1
            }
        }


class BoundReport(BaseModel):
    """
    One named comparison lhs <= rhs

    For kind="inequality" holds is true iff lhs <= rhs + tolerance. For
    kind="implication" lhs and rhs are the numbers the hypothesis compares
    and holds is (not hypothesis_met) or conclusion_met.
    """
    name: str = Field(description="Identifier of the inequality or fact")
    kind: Literal["inequality", "implication"] = Field(
        "inequality",
        description="Plain inequality or hypothesis/conclusion implication"
    )
    lhs: float = Field(description="Left-hand value")
    rhs: float = Field(description="Right-hand value")
    holds: bool = Field(description="Whether the statement is satisfied")
    slack: float = Field(description="rhs - lhs")
    tight: bool = Field(False, description="lhs and rhs agree within the equality tolerance")
    vacuous: bool = Field(False, description="The statement is satisfied for a trivial reason")
    applicable: bool = Field(True, description="False when the bound is undefined for the input")
    hypothesis_met: Optional[bool] = Field(None, description="Implication hypothesis satisfied")
    conclusion_met: Optional[bool] = Field(None, description="Implication conclusion satisfied")
    witness_match: Optional[bool] = Field(
        None,
        description="Whether the input is the extremal graph named in the equality case"
    )
    note: Optional[str] = Field(None, description="Free-form remark")

    @model_validator(mode='after')
    def validate_implication(self):
        if self.kind == "implication" and self.hypothesis_met is None:
            raise ValueError('implication reports need hypothesis_met')
        return self

    @classmethod
    def compare(
        cls,
        name: str,
        lhs: float,
        rhs: float,
        tolerance: Optional[float] = None,
        **extra
    ) -> "BoundReport":
        """
        Build an inequality report, deriving holds, slack and tight
        """
        tol = settings.COMPARE_TOLERANCE if tolerance is None else tolerance
        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            holds=lhs <= rhs + tol,
            slack=rhs - lhs,
            tight=abs(rhs - lhs) <= settings.EQUALITY_TOLERANCE,
            **extra
        )

    @classmethod
    def implication(
        cls,
        name: str,
        lhs: float,
        rhs: float,
        hypothesis_met: bool,
        conclusion_met: Optional[bool],
        **extra
    ) -> "BoundReport":
        """
        Build an implication report; a false hypothesis makes it vacuous and
        conclusion_met may then be None (not evaluated)
        """
        return cls(
            name=name,
            kind="implication",
            lhs=lhs,
            rhs=rhs,
            holds=(not hypothesis_met) or bool(conclusion_met),
            slack=rhs - lhs,
            vacuous=not hypothesis_met,
            hypothesis_met=hypothesis_met,
            conclusion_met=conclusion_met,
            **extra
        )

    @classmethod
    def not_applicable(cls, name: str, note: str) -> "BoundReport":
        return cls(
            name=name, lhs=0.0, rhs=0.0, holds=True, slack=0.0,
            vacuous=True, applicable=False, note=note
        )

    class Config:
        json_schema_extra = {
            "examples": [
                {
                    "name": "nikiforov",
                    "kind": "inequality",
                    "lhs": 3.0,
                    "rhs": 3.0,
                    "holds": True,
                    "slack": 0.0,
                    "tight": True
                }
            ]
        }


class DeletionStep(BaseModel):
    """
    One pass of the minimum-entry deletion loop: G_r -> G_{r+1}
    """
    order: int = Field(ge=2, description="|G_r| before the deletion")
    mu: float = Field(description="mu(G_r)")
    min_degree: int = Field(ge=0, description="delta(G_r)")
    min_entry: float = Field(description="Smallest principal eigenvector entry of G_r")
    deleted_vertex: int = Field(ge=0, description="Index in G_r of the deleted vertex")
    original_label: int = Field(ge=0, description="Index of the deleted vertex in the input graph")
    corollary_floor: float = Field(
        description="mu (1 - 1/(mu^2/(k-1) + |G_r| - k)), the lower bound for mu(G_{r+1})"
    )
    next_mu: float = Field(description="mu(G_{r+1})")
    floor_met: bool = Field(description="next_mu >= corollary_floor within tolerance")


class DeletionTrace(BaseModel):
    """
    Graph sequence G_0, ..., G_s of the vertex-deletion procedure and the
    terminal graph H = G_s
    """
    k: int = Field(ge=2)
    c: float = Field(0.0, ge=0.0, description="Offset c of the outcome (ii) threshold")
    start_order: int = Field(ge=2)
    order_floor: int = Field(ge=1, description="floor(sqrt(n)), the smallest order reached")
    steps: List[DeletionStep] = Field(default_factory=list)
    terminated_by: Literal["spectral", "min-degree", "order-floor"] = Field(
        description="Guard that stopped the loop"
    )
    terminal_order: int = Field(ge=1, description="p = |H|")
    terminal_mu: float = Field(description="mu(H)")
    terminal_min_degree: int = Field(ge=0, description="delta(H)")
    terminal_graph6: str = Field(description="graph6 text of H in its own labeling")
    outcome: Literal["i", "ii", "none"] = Field(
        description="Which conclusion H satisfies: (i) mu(H) > sqrt((2k+1)|H|), "
                    "(ii) large order, delta >= k and mu above the shifted threshold"
    )

    @model_validator(mode='after')
    def validate_orders(self):
        expected = self.start_order
        for step in self.steps:
            if step.order != expected:
                raise ValueError('trace orders must decrease by exactly one per step')
            expected -= 1
        if expected != self.terminal_order:
            raise ValueError('terminal order does not follow the recorded steps')
        return self


class Lev3Report(BaseModel):
    """
    Outcome of checking a real sequence against the shrinking-order lemma

    conclusion_holds is None whenever the lemma's preconditions fail.
    """
    a: float
    k: int
    n: int
    s: int
    preconditions_ok: bool
    precondition_failures: List[str] = Field(default_factory=list)
    hypotheses_hold: Optional[bool] = Field(
        None,
        description="x_0 bound and the recurrence inequality hold for the given sequence"
    )
    hypothesis_failures: List[int] = Field(
        default_factory=list,
        description="Indices i whose recurrence step x_{i+1} >= ... fails (-1 for x_0)"
    )
    conclusion_holds: Optional[bool] = None
    failing_indices: List[int] = Field(
        default_factory=list,
        description="Indices i in 1..s with x_i below the concluded bound"
    )
