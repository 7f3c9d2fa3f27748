#!/usr/bin/env python3
"""Computation services: fusion data, morphism calculus, tube algebra, commutant and counting checks."""

from .fusion_data import load_category, load_catalog, validate, subcategory, global_dim
from .hom_calculus import HomCalculus, RigidityPair
from .tube_algebra import TubeAlgebra, build_tube, tube_multiply, tube_star, tube_phi, trace_form
from .commutant import (
    center_basis, minimal_central_projections, block_dimension, matrix_units, decompose,
    extract_half_braiding, verify_half_braiding, conjugate_half_braiding, tensor_half_braidings,
    hom_half_braidings, fusion_table, trivial_half_braiding, braiding_half_braiding, equivalent,
)
from .oracle import solve_bfe_direct
from .alpha_counting import (
    su2_level_k, check_modular_data, verlinde_fusion, check_extension,
    check_center_theorem, check_relative_commutant_theorems,
)

__all__ = [
    'load_category', 'load_catalog', 'validate', 'subcategory', 'global_dim',
    'HomCalculus', 'RigidityPair',
    'TubeAlgebra', 'build_tube', 'tube_multiply', 'tube_star', 'tube_phi', 'trace_form',
    'center_basis', 'minimal_central_projections', 'block_dimension', 'matrix_units', 'decompose',
    'extract_half_braiding', 'verify_half_braiding', 'conjugate_half_braiding', 'tensor_half_braidings',
    'hom_half_braidings', 'fusion_table', 'trivial_half_braiding', 'braiding_half_braiding', 'equivalent',
    'solve_bfe_direct',
    'su2_level_k', 'check_modular_data', 'verlinde_fusion', 'check_extension',
    'check_center_theorem', 'check_relative_commutant_theorems',
]
