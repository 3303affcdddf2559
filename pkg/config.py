"""
Configuration settings for the Spectral Turan Workbench
Manages numeric tolerances, search limits, worker counts and output defaults
Values are read from environment variables (or a local .env file) with
fallback defaults suitable for desk-scale runs
"""

import math
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


class Settings:
    """
    Application configuration class that loads settings from environment variables
    with fallback defaults for local runs
    """

    # Application metadata
    APP_NAME: str = "Spectral Turan Workbench"
    APP_VERSION: str = "1.0.0"
    APP_DESCRIPTION: str = (
        "Maximum spectral radius of graphs without paths and cycles of given order"
    )

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("BST_LOG_LEVEL", "INFO")

    # Worker Configuration
    THREADS: int = int(os.getenv("BST_THREADS", "1"))

    # Eigensolver Configuration
    EIGEN_TOLERANCE: float = float(os.getenv("BST_EIGEN_TOLERANCE", "1e-10"))
    EIGEN_SHIFT: float = float(os.getenv("BST_EIGEN_SHIFT", "1.0"))
    ITERATION_FACTOR: int = int(os.getenv("BST_ITERATION_FACTOR", "100"))

    # Comparison tolerances
    COMPARE_TOLERANCE: float = float(os.getenv("BST_COMPARE_TOLERANCE", "1e-9"))
    WITNESS_TOLERANCE: float = float(os.getenv("BST_WITNESS_TOLERANCE", "1e-9"))
    EQUALITY_TOLERANCE: float = float(os.getenv("BST_EQUALITY_TOLERANCE", "1e-8"))

    # Output Configuration
    OUTPUT_FORMAT: str = os.getenv("BST_OUTPUT_FORMAT", "table")
    RESULTS_DIR: str = os.getenv("BST_RESULTS_DIR", "results")
    SIGNIFICANT_DIGITS: int = int(os.getenv("BST_SIGNIFICANT_DIGITS", "12"))
    PROGRESS: bool = os.getenv("BST_PROGRESS", "0").lower() in ("1", "true", "yes")

    # Hard limits (not configurable)
    MAX_ORDER: int = 64
    MAX_CANONICAL_ORDER: int = 12
    MAX_ENUMERATION_ORDER: int = 10
    SUBSET_DP_LIMIT: int = 20
    MAX_TREE_ORDER: int = 10

    @classmethod
    def iteration_cap(cls, order: int) -> int:
        """
        Iteration cap for power iteration on a component of the given order
        """
        return max(1, int(math.ceil(cls.ITERATION_FACTOR * order * math.log(order + 1))))

    @classmethod
    def results_path(cls) -> Path:
        """
        Default directory for persisted extremal records
        """
        return Path(cls.RESULTS_DIR)

    @classmethod
    def thread_count(cls) -> int:
        """
        Default worker count, never below one
        """
        return max(1, cls.THREADS)


# Create a global settings instance
settings = Settings()
