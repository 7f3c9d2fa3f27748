#!/usr/bin/env python3
"""Check verdicts and tool results."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """One named identity: both sides, the residual and the verdict."""
    name: str
    passed: bool
    residual: float = 0.0
    tolerance: Optional[float] = None
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    @classmethod
    def compare(cls, name: str, lhs: float, rhs: float, tolerance: float,
                relative: bool = False, note: str = "") -> "CheckResult":
        residual = abs(lhs - rhs)
        if relative and abs(lhs) > 0:
            residual /= abs(lhs)
        return cls(name, residual < tolerance, float(residual), tolerance, lhs, rhs, note)

    @classmethod
    def below(cls, name: str, residual: float, tolerance: float, note: str = "") -> "CheckResult":
        return cls(name, residual < tolerance, float(residual), tolerance, note=note)

    @classmethod
    def equal(cls, name: str, lhs: Any, rhs: Any, note: str = "") -> "CheckResult":
        return cls(name, lhs == rhs, 0.0 if lhs == rhs else 1.0, None, lhs, rhs, note)

    def get_summary_dict(self) -> Dict[str, Any]:
        summary = {"passed": self.passed, "residual": self.residual}
        if self.tolerance is not None:
            summary["tolerance"] = self.tolerance
        if self.lhs is not None:
            summary["lhs"] = self.lhs
        if self.rhs is not None:
            summary["rhs"] = self.rhs
        if self.note:
            summary["note"] = self.note
        return summary


def checks_to_dict(checks: List[CheckResult]) -> Dict[str, Any]:
    return {check.name: check.get_summary_dict() for check in checks}


def all_passed(checks: List[CheckResult]) -> bool:
    return all(check.passed for check in checks)


@dataclass
class ToolResult:
    """What a tool hands back to the command line: a report and an exit code."""
    report: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    @property
    def passed(self) -> bool:
        return self.exit_code == 0
