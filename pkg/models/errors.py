#!/usr/bin/env python3
"""Exception hierarchy shared by the engine and the tools."""

from typing import Optional, Tuple


class CommutantError(Exception):
    """Base class for all toolkit errors."""
    exit_code = 1


class InputError(CommutantError):
    """Problems with what the user handed us."""
    exit_code = 2


class ParseError(InputError):
    """A data file does not follow the documented schema."""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ClosureError(InputError):
    """A label set is not a fusion- and dual-closed subcategory."""

    def __init__(self, message: str, triple: Optional[Tuple[int, int, int]] = None):
        self.triple = triple
        super().__init__(message)


class ConfigurationError(InputError):
    pass


class ShapeMismatchError(CommutantError):
    pass


class AlgebraMismatchError(CommutantError):
    pass


class ClusteringAmbiguityError(CommutantError):
    pass


class RankInconsistencyError(CommutantError):
    pass


class BlockDimensionError(CommutantError):
    pass


class DimensionMismatchError(CommutantError):
    pass


class ExtractionError(CommutantError):
    pass


class AssociativityError(CommutantError):
    pass
