#!/usr/bin/env python3
"""Data models for fusion categories, tube algebras and half-braidings."""

from .base import BaseModel
from .errors import (
    CommutantError, InputError, ParseError, ClosureError, ConfigurationError,
    ShapeMismatchError, AlgebraMismatchError, ClusteringAmbiguityError,
    RankInconsistencyError, BlockDimensionError, DimensionMismatchError,
    ExtractionError, AssociativityError,
)
from .fusion_category import FusionRing, FusionCategoryData, SubcategoryView, ValidationReport
from .morphism import Morphism
from .tube import TubeBasisIndex, TubeElement
from .half_braiding import (
    SimpleBlock, HalfBraiding, HalfBraidingCheck, HomResult, CommutantFusionTable, OracleStart, OracleResult,
)
from .modular import ModularData, ExtensionSummary
from .reports import CheckResult, ToolResult

__all__ = [
    'BaseModel',
    'CommutantError', 'InputError', 'ParseError', 'ClosureError', 'ConfigurationError',
    'ShapeMismatchError', 'AlgebraMismatchError', 'ClusteringAmbiguityError',
    'RankInconsistencyError', 'BlockDimensionError', 'DimensionMismatchError',
    'ExtractionError', 'AssociativityError',
    'FusionRing', 'FusionCategoryData', 'SubcategoryView', 'ValidationReport',
    'Morphism',
    'TubeBasisIndex', 'TubeElement',
    'SimpleBlock', 'HalfBraiding', 'HalfBraidingCheck', 'HomResult',
    'CommutantFusionTable', 'OracleStart', 'OracleResult',
    'ModularData', 'ExtensionSummary',
    'CheckResult', 'ToolResult',
]
