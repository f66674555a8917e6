"""
Configuration and logging setup.

The Broker service is configured from the environment (optionally through .env
files); the CLI is configured from its flags only.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

PACKAGE_DIR = Path(__file__).parent
DEFAULT_TAXONOMY_PATH = PACKAGE_DIR / "data" / "grid_resources.tax"

DEFAULT_THRESHOLD = 0.8
DEFAULT_ALGORITHM = "drsrd"

# Desk-scale experiment defaults
DEFAULT_RESOURCES = 1000
DEFAULT_QUERIES = 50
DEFAULT_CERTAINTY = 0.5
DEFAULT_SEED = 7
DEFAULT_REPEATS = 1
DEFAULT_BENCH_RESOURCES = (500, 1000, 2000)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Install a single stderr handler on the root logger."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level.upper())


class Settings(BaseModel):
    """Broker service settings."""
    taxonomy_path: Path = Field(default=DEFAULT_TAXONOMY_PATH, description="Taxonomy document")
    repository_path: Optional[Path] = Field(None, description="Record file; empty repository when unset")
    algorithm: str = Field(default=DEFAULT_ALGORITHM, description="Default discovery algorithm")
    threshold: float = Field(default=DEFAULT_THRESHOLD, ge=0.0, le=1.0, description="Default retrieval threshold")
    log_level: str = Field(default="INFO", description="Logging level name")

    @field_validator("algorithm")
    @classmethod
    def _known_algorithm(cls, value: str) -> str:
        if value not in ("drsrd", "classic", "exact"):
            raise ValueError(f"unknown algorithm {value!r}")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        if not isinstance(logging.getLevelName(value.upper()), int):
            raise ValueError(f"unknown log level {value!r}")
        return value.upper()

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from DRSRD_* variables after loading .env files."""
        # Root .env first, then the package .env overrides it
        load_dotenv()
        package_env_path = PACKAGE_DIR / ".env"
        if package_env_path.exists():
            load_dotenv(package_env_path, override=True)

        values = {}
        if os.getenv("DRSRD_TAXONOMY"):
            values["taxonomy_path"] = os.environ["DRSRD_TAXONOMY"]
        if os.getenv("DRSRD_REPOSITORY"):
            values["repository_path"] = os.environ["DRSRD_REPOSITORY"]
        if os.getenv("DRSRD_ALGORITHM"):
            values["algorithm"] = os.environ["DRSRD_ALGORITHM"]
        if os.getenv("DRSRD_THRESHOLD"):
            values["threshold"] = os.environ["DRSRD_THRESHOLD"]
        if os.getenv("DRSRD_LOG_LEVEL"):
            values["log_level"] = os.environ["DRSRD_LOG_LEVEL"]
        return cls(**values)
