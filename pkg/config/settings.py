"""
Symmetric Orbit Polynomials - Application Configuration

This module contains application settings and configuration management.
Values come from the environment, optionally seeded from a local .env file.
"""

import os
from pathlib import Path
from typing import List

from dotenv import load_dotenv

load_dotenv()


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class AppConfig:
    """Application configuration settings"""

    # Application Info
    APP_NAME = "Symmetric Orbit Polynomials"
    APP_VERSION = "1.0.0"
    APP_DESCRIPTION = "Exact cohomology and K-theory representatives of symmetric orbit closures"

    # Application Settings
    APP_DEBUG = _env_flag("APP_DEBUG", "false")
    APP_LOG_LEVEL = os.getenv("APP_LOG_LEVEL", "WARNING").upper()

    # Computation bounds ("desk scale")
    MAX_AMBIENT_SIZE = int(os.getenv("MAX_AMBIENT_SIZE", "8"))
    BASIS_CACHE_SIZE = int(os.getenv("BASIS_CACHE_SIZE", "4096"))
    VERIFY_EXPANSIONS = _env_flag("VERIFY_EXPANSIONS", "true")

    # Verification suite defaults
    VERIFY_ORTHOGONAL_SIZES = os.getenv("VERIFY_ORTHOGONAL_SIZES", "3,4,5,6")
    VERIFY_SYMPLECTIC_SIZES = os.getenv("VERIFY_SYMPLECTIC_SIZES", "4,6,8")
    PATH_ENUMERATION_MAX_ORTHOGONAL = int(os.getenv("PATH_ENUMERATION_MAX_ORTHOGONAL", "4"))
    PATH_ENUMERATION_MAX_SYMPLECTIC = int(os.getenv("PATH_ENUMERATION_MAX_SYMPLECTIC", "6"))
    ORACLE_MAX_SIZE = int(os.getenv("ORACLE_MAX_SIZE", "4"))
    DESCENT_CHECK_MAX_SIZE = int(os.getenv("DESCENT_CHECK_MAX_SIZE", "5"))
    LOCALIZATION_SYMPLECTIC_SIZES = os.getenv("LOCALIZATION_SYMPLECTIC_SIZES", "4,6")
    LOCALIZATION_ORTHOGONAL_SIZES = os.getenv("LOCALIZATION_ORTHOGONAL_SIZES", "2,3,4,5")

    # Randomized identity suites
    RANDOM_SEED = int(os.getenv("RANDOM_SEED", "20240101"))
    RANDOM_TRIALS = int(os.getenv("RANDOM_TRIALS", "1000"))
    RANDOM_MAX_DEGREE = int(os.getenv("RANDOM_MAX_DEGREE", "6"))

    # Project Paths
    PROJECT_ROOT = Path(__file__).parent.parent
    FIXTURES_DIR = PROJECT_ROOT / "fixtures"
    GOLDEN_TABLES_PATH = FIXTURES_DIR / "golden_tables.json"
    REPORTS_DIR = Path(os.getenv("REPORTS_DIR", str(PROJECT_ROOT / "reports")))

    @classmethod
    def ensure_directories(cls):
        """Ensure the reports directory exists"""
        cls.REPORTS_DIR.mkdir(parents=True, exist_ok=True)

    @classmethod
    def is_development(cls) -> bool:
        """Check if running in development mode"""
        return cls.APP_DEBUG

    @classmethod
    def parse_sizes(cls, text: str) -> List[int]:
        """
        Parse a comma separated list of ambient sizes

        Args:
            text: Value such as "3,4,5"

        Returns:
            Sorted list of distinct sizes
        """
        try:
            sizes = sorted({int(part) for part in text.split(",") if part.strip()})
        except ValueError as e:
            from core.error_handler import create_configuration_error
            raise create_configuration_error(f"Malformed size list {text!r}: {e}")
        if any(size < 1 for size in sizes):
            from core.error_handler import create_configuration_error
            raise create_configuration_error(f"Sizes must be positive: {text!r}")
        return sizes

    @classmethod
    def orthogonal_sizes(cls) -> List[int]:
        return cls.parse_sizes(cls.VERIFY_ORTHOGONAL_SIZES)

    @classmethod
    def symplectic_sizes(cls) -> List[int]:
        return cls.parse_sizes(cls.VERIFY_SYMPLECTIC_SIZES)

    @classmethod
    def get_log_config(cls) -> dict:
        """Get logging configuration"""
        return {
            "level": cls.APP_LOG_LEVEL,
            "debug": cls.APP_DEBUG,
        }
