#!/usr/bin/env python3
"""Tube algebra tools."""

from typing import Any, Dict, List, NamedTuple

from config.logging_setup import get_logger
from config.settings import RunConfig
from engine.commutant import block_dimension, center_basis, minimal_central_projections
from engine.fusion_data import global_dim, validate
from engine.tube_algebra import TubeAlgebra, build_tube, expected_dimension, tube_checks
from models.fusion_category import FusionCategoryData, SubcategoryView
from models.reports import CheckResult, ToolResult
from tools.base_tool import BaseTool
from tools.category_tools import validation_checks

logger = get_logger(__name__)

TUBE_ARGUMENTS = ("category", "sub", "tol", "cluster_tol", "rank_tol", "seed", "format")


class Prepared(NamedTuple):
    run: RunConfig
    data: FusionCategoryData
    view: SubcategoryView
    algebra: TubeAlgebra
    checks: List[CheckResult]


def prepare(tool: BaseTool, arguments: Dict[str, Any]) -> Prepared:
    """Load and validate the category, restrict to C and build Tube(C, D)."""
    tool.require_arguments(arguments)
    run = tool.run_config(arguments)
    data = tool.load_data(run, tolerance_given=arguments.get("tol") is not None)
    checks = [CheckResult(
        "category_valid", validate(data).passed, 0.0, data.tolerance,
        note="run the validate command for the individual residuals",
    )]
    view = tool.load_view(data, run)
    algebra = build_tube(view, data)
    return Prepared(run, data, view, algebra, checks)


def algebra_summary(prepared: Prepared) -> Dict[str, Any]:
    A = prepared.algebra
    return {
        "category": prepared.data.get_summary_dict(),
        "subcategory": prepared.view.get_summary_dict(),
        "dimC": global_dim(prepared.view),
        "dimD": global_dim(prepared.data),
        "tube_dimension": A.dimension,
        "expected_dimension": expected_dimension(prepared.view),
        "sectors": len(A.sectors),
        "commutative": A.is_commutative,
    }


class TubeTool(BaseTool):
    """Build Tube(C, D) and test its *-algebra axioms."""

    def __init__(self):
        super().__init__(
            name="tube",
            description="Build the tube algebra Tube(C,D) and check associativity, the involution and the trace",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema(*TUBE_ARGUMENTS, required=["category"], extra={
            "dump_basis": {"type": "boolean", "description": "Include every basis intertwiner in the report"},
        })

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        prepared = prepare(self, arguments)
        run = prepared.run
        checks = prepared.checks + tube_checks(prepared.algebra, run.seed, tolerance=run.tolerances.algebra)
        report = algebra_summary(prepared)
        if run.dump_basis:
            report["basis"] = prepared.algebra.dump_basis()
        return self.format_success(report, checks)


class CenterTool(BaseTool):
    """Center of the tube algebra and its minimal central projections."""

    def __init__(self):
        super().__init__(
            name="center",
            description="Compute the center of Tube(C,D) and its minimal central projections",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema(*TUBE_ARGUMENTS, required=["category"])

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        prepared = prepare(self, arguments)
        A, run = prepared.algebra, prepared.run
        center = center_basis(A, run.tolerances)
        blocks = minimal_central_projections(A, run.tolerances, run.seed)
        for block in blocks:
            block_dimension(A, block)
        total = sum((block.z for block in blocks), A.unit * 0.0)

        report = algebra_summary(prepared)
        report["center_dimension"] = len(center)
        report["projections"] = [
            {"size": block.size, "phi_z": block.phi_z, "d": block.d_sigma} for block in blocks
        ]
        dim_c, dim_d = report["dimC"], report["dimD"]
        checks = prepared.checks + [
            CheckResult.equal("center_dimension_equals_block_count", len(center), len(blocks)),
            CheckResult.below("projections_sum_to_unit", (total - A.unit).norm(), run.tolerances.algebra),
            CheckResult.equal("block_sizes_squared_sum_to_dimension",
                              sum(block.size ** 2 for block in blocks), A.dimension),
            CheckResult.compare("sum_d_squared_equals_dimC_dimD",
                                float(sum(block.d_sigma ** 2 for block in blocks)), dim_c * dim_d,
                                run.tolerances.rounding),
        ]
        logger.info(f"Center of Tube({prepared.view.members}) has {len(blocks)} blocks")
        return self.format_success(report, checks)
