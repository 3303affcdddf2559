"""
Record schemas for the Spectral Turan Workbench
Contains Pydantic models for validation and serialization of every report
"""

from .patterns import CycleAtLeast, CycleOrder, ForbiddenSpec, PathOrder, parse_pattern
from .records import (
    ClaimPoint,
    ClaimVerdict,
    EnumerationCensus,
    ErrorReport,
    ExceptionWitness,
    ExtremalRecord,
    GVariantComparison,
    PatternCheck,
    RunManifest,
    SandwichRow,
)
from .run_config import RunConfig
from .spectral import BoundReport, DeletionStep, DeletionTrace, Lev3Report, SpectralResult

__all__ = [
    'BoundReport',
    'ClaimPoint',
    'ClaimVerdict',
    'CycleAtLeast',
    'CycleOrder',
    'DeletionStep',
    'DeletionTrace',
    'EnumerationCensus',
    'ErrorReport',
    'ExceptionWitness',
    'ExtremalRecord',
    'ForbiddenSpec',
    'GVariantComparison',
    'Lev3Report',
    'PathOrder',
    'PatternCheck',
    'RunConfig',
    'RunManifest',
    'SandwichRow',
    'SpectralResult',
    'parse_pattern',
]
