#!/usr/bin/env python3
"""Configuration management for the relative commutant toolkit."""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

from models.errors import ConfigurationError


# Load environment variables from .env file
load_dotenv()

__version__ = "1.0.0"

DEFAULT_CATALOG_DIR = Path(__file__).resolve().parent.parent / "catalog"


@dataclass
class ToleranceConfig:
    """Numerical thresholds used across the pipeline."""
    validation: float = 1e-9
    rounding: float = 1e-6
    clustering: float = 1e-5
    rank: float = 1e-6
    bfe: float = 1e-7
    algebra: float = 1e-8

    def check(self) -> None:
        for name, value in self.__dict__.items():
            if not value > 0:
                raise ConfigurationError(f"tolerance '{name}' must be positive, got {value}")


@dataclass
class OracleConfig:
    """Settings for the brute-force half-braiding solver."""
    starts: int = 16
    max_iterations: int = 400
    convergence: float = 1e-10
    max_sigma_dimension: float = 6.0


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""
    category: Optional[str] = None
    sub: Optional[List[int]] = None
    modular: Optional[str] = None
    extension: Optional[str] = None
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    output_format: str = "json"
    seed: int = 0
    run_oracle: bool = False
    dump_basis: bool = False

    def __post_init__(self):
        self.tolerances.check()
        if self.output_format not in ("json", "text"):
            raise ConfigurationError(f"unknown output format '{self.output_format}'")


class ConfigManager:
    """Environment-backed defaults, loaded once."""

    def __init__(self):
        self.tolerances = self._load_tolerances()
        self.oracle = self._load_oracle()
        self.seed = int(os.getenv("RDC_SEED", "0"))
        self.catalog_dir = Path(os.getenv("RDC_CATALOG_DIR", str(DEFAULT_CATALOG_DIR)))

    def _load_tolerances(self) -> ToleranceConfig:
        tolerances = ToleranceConfig(
            validation=float(os.getenv("RDC_TOLERANCE", "1e-9")),
            clustering=float(os.getenv("RDC_CLUSTER_TOL", "1e-5")),
            rank=float(os.getenv("RDC_RANK_TOL", "1e-6")),
        )
        tolerances.check()
        return tolerances

    def _load_oracle(self) -> OracleConfig:
        return OracleConfig(starts=int(os.getenv("RDC_ORACLE_STARTS", "16")))

    def run_config(self, validation: Optional[float] = None, clustering: Optional[float] = None,
                   rank: Optional[float] = None, seed: Optional[int] = None,
                   **fields: Any) -> RunConfig:
        """Build a RunConfig from defaults, applying the overrides that were given."""
        overrides = {"validation": validation, "clustering": clustering, "rank": rank}
        tolerances = replace(
            self.tolerances,
            **{key: value for key, value in overrides.items() if value is not None}
        )
        return RunConfig(
            tolerances=tolerances,
            oracle=replace(self.oracle),
            seed=self.seed if seed is None else seed,
            **{key: value for key, value in fields.items() if value is not None},
        )

    def get_config_summary(self) -> Dict[str, Any]:
        """Get configuration summary for debugging."""
        return {
            "tolerances": dict(self.tolerances.__dict__),
            "oracle": dict(self.oracle.__dict__),
            "seed": self.seed,
            "catalog_dir": str(self.catalog_dir),
        }


# Global configuration instance
config = ConfigManager()
