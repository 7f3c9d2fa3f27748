# tools/__init__.py
"""CLI subcommand tools."""

from .base_tool import BaseTool
from .registry import ToolRegistry
from .category_tools import ValidateTool
from .tube_tools import TubeTool, CenterTool
from .commutant_tools import CommutantTool, FusionTool, OracleTool
from .alpha_tools import AlphaCheckTool

__all__ = [
    "BaseTool", "ToolRegistry",
    "ValidateTool", "TubeTool", "CenterTool",
    "CommutantTool", "FusionTool", "OracleTool", "AlphaCheckTool",
]
