#!/usr/bin/env python3
"""Output formatting utilities."""

import json
import math
from typing import Any, Dict, List

import numpy as np


def to_jsonable(value: Any) -> Any:
    """Plain JSON types: complex numbers as ``[re, im]``, arrays as nested lists, non-finite floats as strings."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(float(value.real)), to_jsonable(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        # normalize negative zero
        return value + 0.0
    return value


def to_json(report: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, two-space indentation."""
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False)


def _scalar(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, list):
        if len(value) == 2 and all(isinstance(v, float) for v in value):
            return f"{value[0]:.6g}{value[1]:+.6g}i"
        if len(value) > 12:
            return f"[{len(value)} items]"
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return f"{{{len(value)} entries}}"
    return str(value)


def format_checks(checks: Dict[str, Dict[str, Any]]) -> str:
    """One line per check with its verdict, residual and tolerance."""
    if not checks:
        return "No checks.\n"
    width = max(len(name) for name in checks)
    output = ""
    for name in sorted(checks):
        check = checks[name]
        icon = "✅" if check.get("passed") else "❌"
        line = f"{icon} {name:<{width}}  residual {_scalar(check.get('residual', 0.0))}"
        if check.get("tolerance") is not None:
            line += f" (tol {_scalar(check['tolerance'])})"
        if check.get("lhs") is not None or check.get("rhs") is not None:
            line += f"  lhs={_scalar(check.get('lhs'))} rhs={_scalar(check.get('rhs'))}"
        output += line + "\n"
        if check.get("note"):
            output += f"   {check['note']}\n"
    return output


def format_blocks(blocks: List[Dict[str, Any]]) -> str:
    output = ""
    for i, block in enumerate(blocks):
        objects = " + ".join(f"{n}·{lam}" if n > 1 else str(lam) for lam, n in block.get("n", {}).items())
        output += f"  {i:>3}  d = {_scalar(block.get('d'))}  size {block.get('size')}  σ = {objects}\n"
    return output


def format_report(report: Dict[str, Any]) -> str:
    """Human-readable rendering of a tool report."""
    report = to_jsonable(report)
    status = report.get("status", "")
    icon = {"pass": "✅ PASS", "fail": "❌ FAIL", "error": "❌ ERROR"}.get(status, status)
    output = f"""{str(report.get('command', '')).upper()} REPORT

=== SUMMARY ===
Status: {icon}
"""
    if "error" in report:
        error = report["error"]
        output += f"Error: {error.get('type')}: {error.get('message')}\n"
        return output

    sections = []
    for key in sorted(report):
        if key in ("command", "status", "checks", "error"):
            continue
        value = report[key]
        if key == "blocks" and isinstance(value, list):
            sections.append(f"\n=== BLOCKS ({len(value)}) ===\n" + format_blocks(value))
        elif isinstance(value, dict):
            body = "".join(f"  {k}: {_scalar(v)}\n" for k, v in sorted(value.items()))
            sections.append(f"\n=== {key.upper()} ===\n" + body)
        else:
            output += f"{key}: {_scalar(value)}\n"
    output += "".join(sections)
    output += "\n=== CHECKS ===\n" + format_checks(report.get("checks", {}))
    return output
