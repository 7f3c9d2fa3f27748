#!/usr/bin/env python3
"""α-induction counting tool."""

from typing import Any, Dict

from engine.alpha_counting import (
    check_center_theorem, check_extension, check_modular_data, check_relative_commutant_theorems,
    derived_dimensions, load_extension, load_modular,
)
from models.reports import ToolResult
from tools.base_tool import BaseTool


class AlphaCheckTool(BaseTool):
    """Check a modular invariant and the sector counts of an extension against the dimension identities."""

    def __init__(self):
        super().__init__(
            name="alpha-check",
            description="Check modular data, a modular invariant and the α-induction counts of an extension",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema("tol", "format", required=["modular", "extension"], extra={
            "modular": {"type": "string", "description": "Modular data JSON file or su2:k"},
            "extension": {"type": "string", "description": "Extension summary JSON file or catalog name"},
        })

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        self.require_arguments(arguments)
        run = self.run_config(arguments)
        md = load_modular(run.modular)
        ext = load_extension(run.extension)
        tol = run.tolerances.validation
        checks = (
            check_modular_data(md, tol)
            + check_extension(md, ext, tol)
            + check_center_theorem(md, ext, run.tolerances.rounding)
            + check_relative_commutant_theorems(md, ext, run.tolerances.rounding)
        )
        report = {
            "modular": md.get_summary_dict(),
            "extension": ext.get_summary_dict(),
            "rank_C": md.rank,
            "counts": dict(ext.counts),
            "dimensions": derived_dimensions(md, ext),
        }
        return self.format_success(report, checks)
