# config/__init__.py
"""Configuration management."""

from .settings import config, ConfigManager, ToleranceConfig, OracleConfig, RunConfig

__all__ = ["config", "ConfigManager", "ToleranceConfig", "OracleConfig", "RunConfig"]
