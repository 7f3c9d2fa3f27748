#!/usr/bin/env python3
"""Dimension and count consequences of α-induction for a modular category with a Q-system θ."""

import json
import re
from pathlib import Path
from typing import Dict, List, Union

import numpy as np

from config.logging_setup import get_logger
from models.errors import ParseError
from models.modular import ExtensionSummary, ModularData
from models.reports import CheckResult

logger = get_logger(__name__)

BUILTIN_PATTERN = re.compile(r"^su2:(\d+)$")


def su2_level_k(k: int) -> ModularData:
    """Modular data of SU(2) at level k: S_jl = sqrt(2/(k+2)) sin(π(j+1)(l+1)/(k+2))."""
    if k < 1:
        raise ParseError(f"level must be at least 1, got {k}", "modular")
    n = k + 2
    j = np.arange(k + 1)
    S = np.sqrt(2.0 / n) * np.sin(np.pi * np.outer(j + 1, j + 1) / n)
    central_charge = 3.0 * k / n
    h = j * (j + 2) / (4.0 * n)
    T = np.exp(2j * np.pi * (h - central_charge / 24.0))
    return ModularData({
        "name": f"su2_{k}",
        "labels": [str(v) for v in j],
        "S": S.tolist(),
        "T": [[t.real, t.imag] for t in T],
    })


def load_modular(spec: str) -> ModularData:
    """``su2:k`` or a path to a modular-data JSON document."""
    match = BUILTIN_PATTERN.match(spec.strip())
    if match:
        return su2_level_k(int(match.group(1)))
    return ModularData(_read_json(spec))


def load_extension(path: Union[str, Path]) -> ExtensionSummary:
    from engine.fusion_data import resolve_path
    return ExtensionSummary(_read_json(str(resolve_path(str(path)))))


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}", "path")
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}")


def verlinde_fusion(md: ModularData) -> np.ndarray:
    """N_ab^c = Σ_m S_am S_bm conj(S_cm) / S_0m."""
    S = md.S
    return np.einsum('am,bm,cm,m->abc', S, S, S.conj(), 1.0 / S[0, :]).real


def check_modular_data(md: ModularData, tolerance: float = 1e-9) -> List[CheckResult]:
    S, T = md.S, np.diag(md.T)
    identity = np.eye(md.rank)
    S2 = S @ S
    ST3 = np.linalg.matrix_power(S @ T, 3)
    phase = np.trace(S2.conj().T @ ST3) / np.trace(S2.conj().T @ S2)
    charge = np.round(S2.real)
    is_permutation = (np.all(np.isin(charge, (0, 1))) and np.all(charge.sum(axis=0) == 1)
                      and np.all(charge.sum(axis=1) == 1))
    N = verlinde_fusion(md)
    return [
        CheckResult.below("S_unitary", float(np.max(np.abs(S @ S.conj().T - identity))), tolerance),
        CheckResult.below("S_symmetric", float(np.max(np.abs(S - S.T))), tolerance),
        CheckResult.below("ST_cubed_equals_S_squared_projectively",
                          float(np.max(np.abs(ST3 - phase * S2))) + abs(abs(phase) - 1.0), tolerance),
        CheckResult("S_squared_is_charge_conjugation", bool(is_permutation and charge[0, 0] == 1),
                    float(np.max(np.abs(S2 - charge))), tolerance),
        CheckResult.below("verlinde_integrality", float(np.max(np.abs(N - np.round(N)))), 1e-6),
        CheckResult.below("verlinde_nonnegative", float(max(0.0, -np.min(np.round(N)))), 0.5),
    ]


def derived_dimensions(md: ModularData, ext: ExtensionSummary) -> Dict[str, float]:
    """Global dimensions of D⁰, D±, D: supplied values where given, otherwise from dim C and d(θ)."""
    dim_c = md.global_dimension
    d_theta = float(sum(md.qdim[label] for label in ext.theta))
    derived = {
        "d0": dim_c / d_theta ** 2,
        "dplus": dim_c / d_theta,
        "dminus": dim_c / d_theta,
        "dfull": dim_c,
    }
    used = {key: ext.dims.get(key, value) for key, value in derived.items()}
    return {
        "dimC": dim_c,
        "d_theta": d_theta,
        **{f"derived_{key}": value for key, value in derived.items()},
        **{f"dim_{key}": value for key, value in used.items()},
    }


def check_extension(md: ModularData, ext: ExtensionSummary, tolerance: float = 1e-9) -> List[CheckResult]:
    """Consistency of the supplied modular invariant and counts with the modular data."""
    Z = ext.Z
    checks = [CheckResult.equal("Z_matches_rank", int(Z.shape[0]), md.rank)]
    if Z.shape[0] != md.rank:
        return checks
    Zf = Z.astype(float)
    T = np.diag(md.T)
    theta_row = np.zeros(md.rank, dtype=int)
    for label in ext.theta:
        theta_row[label] += 1
    checks += [
        CheckResult.equal("Z_00_is_one", int(Z[0, 0]), 1),
        CheckResult("Z_nonnegative_integers", bool(np.all(Z >= 0) and np.all(Z == np.round(Z))), 0.0),
        CheckResult.below("Z_commutes_with_S", float(np.max(np.abs(Zf @ md.S - md.S @ Zf))), tolerance),
        CheckResult.below("Z_commutes_with_T", float(np.max(np.abs(Zf @ T - T @ Zf))), tolerance),
        CheckResult.equal("theta_matches_Z_vacuum_row", theta_row.tolist(), Z[0].astype(int).tolist()),
        CheckResult.equal("trace_Z_equals_chiral_count", int(np.trace(Z)), ext.counts["dplus"]),
        CheckResult.equal("sum_Z_squared_equals_full_count", int(np.sum(Z ** 2)), ext.counts["dfull"]),
    ]
    return checks


def check_center_theorem(md: ModularData, ext: ExtensionSummary, tolerance: float = 1e-6) -> List[CheckResult]:
    """The center of D⁺ is C ⊠ (D⁰)^opp: (dim D⁺)² = dim C · dim D⁰."""
    dims = derived_dimensions(md, ext)
    checks = [CheckResult.compare(
        "center_of_chiral_dimension", dims["dim_dplus"] ** 2, dims["dimC"] * dims["dim_d0"], tolerance,
        relative=True,
    )]
    predicted = md.rank * ext.counts["d0"]
    if ext.center_count is not None:
        checks.append(CheckResult.equal("center_of_chiral_count", ext.center_count, predicted))
    else:
        checks.append(CheckResult("center_of_chiral_count", True, 0.0, rhs=predicted,
                                  note="predicted |Irr(C)|·|Irr(D⁰)|; no supplied count to compare"))
    return checks


def check_relative_commutant_theorems(md: ModularData, ext: ExtensionSummary,
                                      tolerance: float = 1e-6) -> List[CheckResult]:
    """Dimension identities of the relative commutants of C, D⁺ and D⁰ inside D, and the count predictions."""
    dims = derived_dimensions(md, ext)
    dim_c, d0, dp, dm, dfull = (dims[k] for k in ("dimC", "dim_d0", "dim_dplus", "dim_dminus", "dim_dfull"))
    counts = ext.counts
    checks = [
        CheckResult.compare("relative_commutant_plus_dimension", dp * dfull, dim_c * dm, tolerance, relative=True,
                            note="commutant of the chiral category is C ⊠ D⁻"),
        CheckResult("relative_commutant_ambichiral_dimension", True, 0.0, tolerance, d0 * dp, dp * d0,
                    note="tautological: D⁺ ⊠ D⁰ has dimension dim D⁺ · dim D⁰ on both sides"),
        CheckResult.compare("relative_commutant_chiral_pair_dimension", d0 * dfull, dp * dm, tolerance, relative=True,
                            note="commutant of D⁰ is D⁺ ⊠ D⁻"),
        CheckResult.compare("identities_hold_iff_dimD_equals_dimC", dfull, dim_c, tolerance, relative=True),
        CheckResult.equal("chiral_counts_agree", counts["dplus"], counts["dminus"]),
        CheckResult.equal("trace_Z_equals_minus_count", int(np.trace(ext.Z)), counts["dminus"]),
        CheckResult("predicted_count_C_times_minus", True, 0.0, rhs=md.rank * counts["dminus"]),
        CheckResult("predicted_count_plus_times_ambichiral", True, 0.0, rhs=counts["dplus"] * counts["d0"]),
        CheckResult("predicted_count_plus_times_minus", True, 0.0, rhs=counts["dplus"] * counts["dminus"]),
    ]
    if ext.rank_c is not None:
        checks.insert(0, CheckResult.equal("rank_C_matches_extension", md.rank, ext.rank_c))
    logger.info(f"Relative commutant identities: {sum(c.passed for c in checks)}/{len(checks)} pass")
    return checks
