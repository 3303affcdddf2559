"""
Run configuration schema
Per-invocation overrides of the environment defaults in config.settings
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from config import settings


class RunConfig(BaseModel):
    """
    Tolerances, workers and output options for one CLI invocation
    """
    tolerance: float = Field(
        default_factory=lambda: settings.EIGEN_TOLERANCE,
        description="Eigensolver residual tolerance"
    )
    compare_tolerance: float = Field(
        default_factory=lambda: settings.COMPARE_TOLERANCE,
        description="Slack allowed when checking lhs <= rhs"
    )
    threads: int = Field(
        default_factory=settings.thread_count,
        description="Worker processes for enumeration"
    )
    output_format: Literal["table", "csv", "json"] = Field(
        default_factory=lambda: settings.OUTPUT_FORMAT,
        description="Report rendering"
    )
    output: Optional[str] = Field(
        None,
        description="Directory for persisted records; stdout only when unset unless resuming"
    )
    resume: bool = Field(False, description="Skip cells already recorded in the output directory, or in the configured results directory when output is unset")

    @field_validator('tolerance', 'compare_tolerance')
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        if not v > 0:
            raise ValueError('tolerance must be positive')
        return v

    @field_validator('threads')
    @classmethod
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError('thread count must be at least 1')
        return v

    class Config:
        json_schema_extra = {
            "example": {
                "tolerance": 1e-10,
                "compare_tolerance": 1e-9,
                "threads": 4,
                "output_format": "json",
                "output": "results",
                "resume": True
            }
        }
