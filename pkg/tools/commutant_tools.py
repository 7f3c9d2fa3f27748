#!/usr/bin/env python3
"""Relative commutant tools: blocks, half-braidings, fusion rules and the direct solver."""

from collections import Counter
from typing import Any, Dict, List, Tuple

import numpy as np

from config.logging_setup import get_logger
from engine.commutant import (
    block_checks, decompose, extract_half_braiding, fusion_table, hom_half_braidings, verify_half_braiding,
)
from engine.fusion_data import validate
from engine.hom_calculus import HomCalculus
from engine.oracle import solve_bfe_direct
from models.errors import ParseError
from models.half_braiding import CommutantFusionTable, HalfBraiding, SimpleBlock
from models.reports import CheckResult, ToolResult
from tools.base_tool import BaseTool, parse_members
from tools.tube_tools import TUBE_ARGUMENTS, Prepared, algebra_summary, prepare

logger = get_logger(__name__)

Pattern = Tuple[Tuple[int, int], ...]


def pattern_of(multiplicities: Dict[int, int]) -> Pattern:
    return tuple(sorted((lam, n) for lam, n in multiplicities.items() if n))


def pattern_name(pattern: Pattern) -> str:
    return "+".join(f"{n}x{lam}" if n > 1 else str(lam) for lam, n in pattern)


def half_braidings_of(prepared: Prepared) -> Tuple[List[SimpleBlock], List[HalfBraiding], List[CheckResult]]:
    """Decompose the tube algebra and read one half-braiding off every block."""
    A, run = prepared.algebra, prepared.run
    tolerances = run.tolerances
    blocks = decompose(A, tolerances, run.seed)
    checks = block_checks(A, blocks, tolerances)
    half_braidings = []
    worst = 0.0
    for k, block in enumerate(blocks):
        hb = extract_half_braiding(A, block, tolerances)
        hb.name = f"sigma{k}"
        verdict = verify_half_braiding(A.calc, hb, tolerances.bfe)
        if not verdict.passed:
            logger.warning(f"Half-braiding {hb.name} fails verification: {verdict.get_summary_dict()}")
        worst = max(worst, verdict.bfe_residual, verdict.unitarity_defect, verdict.unit_defect)
        half_braidings.append(hb)
    checks.append(CheckResult.below("extracted_half_braidings_satisfy_bfe", worst, tolerances.bfe))
    logger.info(f"Extracted {len(half_braidings)} half-braidings")
    return blocks, half_braidings, checks


def recovers_category(prepared: Prepared, half_braidings: List[HalfBraiding],
                      table: CommutantFusionTable) -> CheckResult:
    """With C trivial every half-braiding sits on one simple of D and the fusion rules are those of D."""
    data = prepared.data
    labels = []
    for hb in half_braidings:
        pattern = pattern_of(hb.object_multiplicities)
        labels.append(pattern[0][0] if len(pattern) == 1 and pattern[0][1] == 1 else -1)
    if sorted(labels) != list(range(data.rank)):
        return CheckResult("c_vec_recovers_d", False, 1.0, lhs=labels, rhs=list(range(data.rank)),
                           note="blocks are not in bijection with the simples of D")
    expected = data.N[np.ix_(labels, labels, labels)]
    mismatches = int(np.sum(expected != table.N))
    return CheckResult("c_vec_recovers_d", mismatches == 0, float(mismatches),
                       note="fusion table compared with N of D under the block-to-label bijection")


class CommutantTool(BaseTool):
    """The full pipeline: Tube(C,D), its blocks, their half-braidings and the fusion rules of C′∩Z(D)."""

    def __init__(self):
        super().__init__(
            name="commutant",
            description="Decompose Tube(C,D) into blocks and extract the half-braidings of the relative commutant",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema(*TUBE_ARGUMENTS, required=["category"], extra={
            "oracle": {"type": "boolean", "description": "Cross-check block counts with the direct solver"},
        })

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        prepared = prepare(self, arguments)
        A, run = prepared.algebra, prepared.run
        blocks, half_braidings, checks = half_braidings_of(prepared)
        table = fusion_table(A.calc, prepared.view, half_braidings, run.tolerances)
        checks = prepared.checks + checks + [
            CheckResult(f"fusion_{c.name}", c.passed, c.residual, c.tolerance, c.lhs, c.rhs, c.note)
            for c in table.checks
        ]
        if prepared.view.is_trivial:
            checks.append(recovers_category(prepared, half_braidings, table))

        report = algebra_summary(prepared)
        sum_d_sq = float(sum(b.d_sigma ** 2 for b in blocks))
        report.update({
            "block_count": len(blocks),
            "sum_d_sq": sum_d_sq,
            "expected": report["dimC"] * report["dimD"],
            "blocks": [
                {**block.get_summary_dict(), **hb.get_summary_dict(A.data.N)}
                for block, hb in zip(blocks, half_braidings)
            ],
            "fusion_table": table.get_summary_dict(),
        })
        if run.run_oracle:
            report["oracle"], oracle_checks = self._cross_check(prepared, blocks)
            checks += oracle_checks
        return self.format_success(report, checks)

    def _cross_check(self, prepared: Prepared, blocks: List[SimpleBlock]) -> Tuple[Dict[str, Any], List[CheckResult]]:
        """Compare, per underlying object σ, the number of blocks with the number of direct solutions."""
        run = prepared.run
        counts = Counter(pattern_of(block.object_multiplicities) for block in blocks)
        summary, checks = {}, []
        for pattern in sorted(counts):
            d_sigma = sum(n * prepared.data.qdim[lam] for lam, n in pattern)
            name = pattern_name(pattern)
            if d_sigma > run.oracle.max_sigma_dimension:
                summary[name] = {"skipped": f"d(sigma) = {d_sigma:.3f} exceeds the oracle limit"}
                continue
            result = solve_bfe_direct(prepared.algebra.calc, prepared.view, dict(pattern),
                                      run.oracle, run.seed, run.tolerances)
            summary[name] = result.get_summary_dict()
            checks.append(CheckResult.equal(f"oracle_count_{name}", result.count, counts[pattern]))
        return summary, checks


class FusionTool(BaseTool):
    """Fusion rules of the relative commutant."""

    def __init__(self):
        super().__init__(
            name="fusion",
            description="Compute the fusion rules of the relative commutant from its half-braidings",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema(*TUBE_ARGUMENTS, required=["category"])

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        prepared = prepare(self, arguments)
        _, half_braidings, checks = half_braidings_of(prepared)
        table = fusion_table(prepared.algebra.calc, prepared.view, half_braidings, prepared.run.tolerances)
        checks = prepared.checks + checks + table.checks
        if prepared.view.is_trivial:
            checks.append(recovers_category(prepared, half_braidings, table))
        report = {
            "category": prepared.data.get_summary_dict(),
            "subcategory": prepared.view.get_summary_dict(),
            "objects": [
                {"name": hb.name, "n": {str(k): v for k, v in sorted(hb.object_multiplicities.items())}}
                for hb in half_braidings
            ],
            "fusion_table": table.get_summary_dict(),
        }
        return self.format_success(report, checks)


class OracleTool(BaseTool):
    """Solve the braiding-fusion equations on a given object directly, without the tube algebra."""

    def __init__(self):
        super().__init__(
            name="oracle",
            description="Find half-braidings on a given object by solving the braiding-fusion equations directly",
        )

    def get_schema(self) -> Dict[str, Any]:
        return self.common_schema(
            "category", "sub", "tol", "rank_tol", "seed", "format", required=["category", "sigma"],
            extra={
                "sigma": {"type": "string",
                          "description": "Comma-separated simple labels of σ, repeated for multiplicity"},
                "starts": {"type": "integer", "description": "Number of random starts"},
            },
        )

    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        self.require_arguments(arguments)
        run = self.run_config(arguments)
        if arguments.get("starts") is not None:
            run.oracle.starts = int(arguments["starts"])
        data = self.load_data(run, tolerance_given=arguments.get("tol") is not None)
        view = self.load_view(data, run)
        labels = parse_members(arguments["sigma"]) or []
        for label in labels:
            if not 0 <= label < data.rank:
                raise ParseError(f"label {label} is outside [0, {data.rank})", "--sigma")
        multiplicities = dict(Counter(labels))
        if not multiplicities:
            raise ParseError("σ must contain at least one simple", "--sigma")

        calc = HomCalculus(data)
        result = solve_bfe_direct(calc, view, multiplicities, run.oracle, run.seed, run.tolerances)
        verdicts = [verify_half_braiding(calc, hb, run.tolerances.bfe) for hb in result.solutions]
        endomorphisms = [hom_half_braidings(calc, hb, hb, run.tolerances.rank).dimension for hb in result.solutions]
        checks = [
            CheckResult("category_valid", validate(data).passed, 0.0, data.tolerance),
            CheckResult.below("solutions_satisfy_bfe",
                              max((max(v.bfe_residual, v.unitarity_defect) for v in verdicts), default=0.0),
                              run.tolerances.bfe),
            CheckResult.equal("solutions_irreducible", endomorphisms, [1] * len(endomorphisms)),
        ]
        report = {
            "category": data.get_summary_dict(),
            "subcategory": view.get_summary_dict(),
            "oracle": result.get_summary_dict(),
            "count": result.count,
            "solutions": [hb.get_summary_dict(data.N) for hb in result.solutions],
        }
        return self.format_success(report, checks)
