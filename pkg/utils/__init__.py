# utils/__init__.py
"""Utility functions."""

from .formatting import to_jsonable, to_json, format_report

__all__ = ["to_jsonable", "to_json", "format_report"]
