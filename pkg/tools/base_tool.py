#!/usr/bin/env python3
"""Base tool class for command-line subcommands."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from config.settings import RunConfig, config
from engine.fusion_data import load_catalog, subcategory, full_view
from models.errors import CommutantError, ConfigurationError, InputError, ParseError
from models.fusion_category import FusionCategoryData, SubcategoryView
from models.reports import CheckResult, ToolResult, all_passed, checks_to_dict


# Arguments shared by the tools; each tool picks the ones it accepts.
COMMON_PROPERTIES: Dict[str, Dict[str, Any]] = {
    "category": {
        "type": "string",
        "description": "Category JSON file or the name of a shipped catalog entry",
    },
    "sub": {
        "type": "string",
        "description": "Comma-separated member labels of the subcategory C (default: all of D)",
    },
    "tol": {"type": "number", "description": "Validation tolerance"},
    "cluster_tol": {"type": "number", "description": "Eigenvalue clustering tolerance"},
    "rank_tol": {"type": "number", "description": "Singular-value threshold for numerical rank"},
    "seed": {"type": "integer", "description": "Seed for random central elements and oracle starts"},
    "format": {
        "type": "string",
        "enum": ["json", "text"],
        "default": "json",
        "description": "Report format",
    },
}


def parse_members(value: Optional[str]) -> Optional[List[int]]:
    """``"0,2"`` -> ``[0, 2]``."""
    if value is None or value == "":
        return None
    try:
        return [int(part) for part in str(value).split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError(f"expected comma-separated integer labels, got '{value}'", "--sub")


class BaseTool(ABC):
    """Base class for subcommands: a schema for the argument parser and an ``execute`` returning a report."""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    @abstractmethod
    def get_schema(self) -> Dict[str, Any]:
        """Get the JSON schema for this tool's input parameters."""
        pass

    @abstractmethod
    def execute(self, arguments: Dict[str, Any]) -> ToolResult:
        """Execute the tool with given arguments."""
        pass

    def common_schema(self, *names: str, required: Optional[List[str]] = None,
                      extra: Optional[Dict[str, Dict[str, Any]]] = None) -> Dict[str, Any]:
        properties = {name: dict(COMMON_PROPERTIES[name]) for name in names}
        properties.update(extra or {})
        return {"type": "object", "properties": properties, "required": list(required or [])}

    def validate_arguments(self, arguments: Dict[str, Any]) -> bool:
        """Validate the provided arguments against the schema."""
        schema = self.get_schema()
        return all(arguments.get(field) is not None for field in schema.get("required", []))

    def require_arguments(self, arguments: Dict[str, Any]) -> None:
        if not self.validate_arguments(arguments):
            missing = [f for f in self.get_schema().get("required", []) if arguments.get(f) is None]
            raise ConfigurationError(f"missing required argument(s): {', '.join('--' + m.replace('_', '-') for m in missing)}")

    def run_config(self, arguments: Dict[str, Any]) -> RunConfig:
        """Merge parsed arguments over the environment defaults."""
        return config.run_config(
            validation=arguments.get("tol"),
            clustering=arguments.get("cluster_tol"),
            rank=arguments.get("rank_tol"),
            seed=arguments.get("seed"),
            category=arguments.get("category"),
            sub=parse_members(arguments.get("sub")),
            modular=arguments.get("modular"),
            extension=arguments.get("extension"),
            output_format=arguments.get("format"),
            run_oracle=arguments.get("oracle"),
            dump_basis=arguments.get("dump_basis"),
        )

    def load_data(self, run: RunConfig, tolerance_given: bool = False) -> FusionCategoryData:
        data = load_catalog(run.category)
        if tolerance_given:
            data.tolerance = run.tolerances.validation
        return data

    def load_view(self, data: FusionCategoryData, run: RunConfig) -> SubcategoryView:
        return full_view(data) if run.sub is None else subcategory(data, run.sub)

    def format_error(self, error: Exception) -> ToolResult:
        """Turn an exception into an error report with the matching exit code."""
        report: Dict[str, Any] = {
            "command": self.name,
            "status": "error",
            "error": {"type": type(error).__name__, "message": str(error)},
        }
        location = getattr(error, "location", None)
        if location:
            report["error"]["location"] = location
        triple = getattr(error, "triple", None)
        if triple:
            report["error"]["triple"] = list(triple)
        if isinstance(error, CommutantError):
            exit_code = error.exit_code
        else:
            exit_code = InputError.exit_code if isinstance(error, (ValueError, TypeError)) else 1
        return ToolResult(report, exit_code)

    def format_success(self, report: Dict[str, Any], checks: List[CheckResult]) -> ToolResult:
        """Attach the check verdicts; exit code 1 if any of them fails."""
        passed = all_passed(checks)
        full = {"command": self.name, "status": "pass" if passed else "fail", **report,
                "checks": checks_to_dict(checks)}
        return ToolResult(full, 0 if passed else 1)
