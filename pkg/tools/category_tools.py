#!/usr/bin/env python3
"""Category data tools."""

from typing import Any, Dict, List

from config.logging_setup import get_logger
from engine.fusion_data import validate
from models.fusion_category import ValidationReport
from models.reports import CheckResult, ToolResult
from tools.base_tool import BaseTool

logger = get_logger(__name__)


def validation_checks(report: ValidationReport) -> List[CheckResult]:
    tol = report.tolerance
    checks = [
        CheckResult("fusion_ring_axioms", not report.ring_failures, float(len(report.ring_failures)),
                    note="; ".join(report.ring_failures[:5])),
        CheckResult.below("pentagon", report.pentagon_residual, tol),
        CheckResult.below("F_and_R_unitary", report.max_unitarity_defect, tol),
        CheckResult.below("unit_normalization", report.unit_normalization_defect, tol),
        CheckResult.below("qdim_is_perron_frobenius", report.qdim_deviation, tol),
        CheckResult.below("qdim_dual_symmetric", report.qdim_symmetry_defect, tol),
    ]
    if report.hexagon_residual is not None:
        checks.append(CheckResult.below("hexagon", report.hexagon_residual, tol))
    return checks


class ValidateTool(BaseTool):
    """Check the pentagon, unitarity, normalization and dimension axioms of a data file."""

    def __init__(self):
        super().__init__(
            name="validate",
            description="Validate fusion category data: fusion ring, pentagon, unitarity, dimensions and hexagon",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema("category", "tol", "format", required=["category"])

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        self.require_arguments(arguments)
        run = self.run_config(arguments)
        data = self.load_data(run, tolerance_given=arguments.get("tol") is not None)
        report = validate(data)
        if not report.passed:
            logger.warning(f"Category '{data.name}' fails validation")
        return self.format_success(
            {"category": data.get_summary_dict(), "validation": report.get_summary_dict()},
            validation_checks(report),
        )
