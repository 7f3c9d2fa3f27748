#!/usr/bin/env python3
"""Direct solution of the braiding-fusion equations, independent of the tube algebra."""

from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares

from config.logging_setup import get_logger
from config.settings import OracleConfig, ToleranceConfig
from engine.commutant import bfe_defects, equivalent, hom_half_braidings, verify_half_braiding
from engine.hom_calculus import HomCalculus
from models.errors import ConfigurationError
from models.fusion_category import SubcategoryView
from models.half_braiding import HalfBraiding, OracleResult, OracleStart, Slot
from models.morphism import Morphism

logger = get_logger(__name__)


class _Parametrization:
    """E(β) for β ≠ 0 as free complex matrices per fusion root, E(0) fixed to the identity."""

    def __init__(self, calc: HomCalculus, view: SubcategoryView, multiplicities: Dict[int, int]):
        self.calc = calc
        self.members = tuple(view.members)
        self.multiplicities = {lam: n for lam, n in multiplicities.items() if n}
        self.slots: List[Slot] = [(lam, i) for lam in sorted(self.multiplicities)
                                  for i in range(self.multiplicities[lam])]
        N = calc.N
        # (β, c, rows, cols, row offsets per slot, col offsets per slot)
        self.blocks: List[Tuple[int, int, int, int, List[int], List[int]]] = []
        self.consistent = True
        for beta in self.members:
            if beta == 0:
                continue
            for c in range(calc.rank):
                cols = [int(N[lam, beta, c]) for lam, _ in self.slots]
                rows = [int(N[beta, mu, c]) for mu, _ in self.slots]
                if sum(rows) != sum(cols):
                    self.consistent = False
                if sum(rows) and sum(cols):
                    self.blocks.append((beta, c, sum(rows), sum(cols),
                                        list(np.cumsum([0] + rows)), list(np.cumsum([0] + cols))))
        self.size = sum(r * k for _, _, r, k, _, _ in self.blocks)

    @property
    def parameter_count(self) -> int:
        return 2 * self.size

    def matrices(self, x: np.ndarray) -> List[np.ndarray]:
        z = x[:self.size] + 1j * x[self.size:]
        result, offset = [], 0
        for _, _, rows, cols, _, _ in self.blocks:
            result.append(z[offset:offset + rows * cols].reshape(rows, cols))
            offset += rows * cols
        return result

    def half_braiding(self, x: np.ndarray) -> HalfBraiding:
        calc = self.calc
        E: Dict[int, Dict[Tuple[Slot, Slot], Morphism]] = {beta: {} for beta in self.members}
        for lam, i in self.slots:
            component = calc.zero((lam, 0), (0, lam))
            component.blocks[lam][0, 0] = 1.0
            E[0][((lam, i), (lam, i))] = component
        for (beta, c, _, _, row_offsets, col_offsets), matrix in zip(self.blocks, self.matrices(x)):
            for s_index, s in enumerate(self.slots):
                for t_index, t in enumerate(self.slots):
                    piece = matrix[row_offsets[t_index]:row_offsets[t_index + 1],
                                   col_offsets[s_index]:col_offsets[s_index + 1]]
                    if piece.size == 0:
                        continue
                    if (s, t) not in E[beta]:
                        E[beta][(s, t)] = calc.zero((s[0], beta), (beta, t[0]))
                    E[beta][(s, t)].blocks[c] = piece.copy()
        d_sigma = float(sum(n * calc.data.qdim[lam] for lam, n in self.multiplicities.items()))
        return HalfBraiding(dict(self.multiplicities), self.members, E, d_sigma)

    def residual(self, x: np.ndarray) -> np.ndarray:
        hb = self.half_braiding(x)
        parts = []
        for matrix in self.matrices(x):
            defect = matrix.conj().T @ matrix - np.eye(matrix.shape[1])
            parts.extend([defect.real.ravel(), defect.imag.ravel()])
        for _, difference in bfe_defects(self.calc, hb, skip_unit=True):
            for block in difference.blocks.values():
                parts.extend([block.real.ravel(), block.imag.ravel()])
        return np.concatenate(parts) if parts else np.zeros(0)


def solve_bfe_direct(calc: HomCalculus, view: SubcategoryView, multiplicities: Dict[int, int],
                     oracle: Optional[OracleConfig] = None, seed: int = 0,
                     tolerances: Optional[ToleranceConfig] = None) -> OracleResult:
    """All inequivalent irreducible half-braidings on σ = ⊕ n_λ λ reachable from seeded random starts.

    Completeness is not claimed; callers account for it through Σ d².
    """
    oracle = oracle or OracleConfig()
    tolerances = tolerances or ToleranceConfig()
    d_sigma = float(sum(n * calc.data.qdim[lam] for lam, n in multiplicities.items()))
    if d_sigma > oracle.max_sigma_dimension:
        raise ConfigurationError(
            f"d(σ) = {d_sigma:.3f} exceeds the oracle limit {oracle.max_sigma_dimension}"
        )
    problem = _Parametrization(calc, view, multiplicities)
    result = OracleResult(dict(problem.multiplicities), [], [])
    if not problem.consistent:
        logger.info("σβ and βσ have different fusion content; no half-braiding exists")
        return result

    rng = np.random.default_rng(seed)
    starts = max(1, oracle.starts) if problem.parameter_count else 1
    for index in range(starts):
        if problem.parameter_count:
            x0 = rng.normal(size=problem.parameter_count)
            fit = least_squares(problem.residual, x0, max_nfev=oracle.max_iterations,
                                xtol=oracle.convergence, ftol=oracle.convergence, gtol=oracle.convergence)
            x, iterations, message = fit.x, int(fit.nfev), str(fit.message)
            residual = float(np.max(np.abs(fit.fun))) if fit.fun.size else 0.0
        else:
            x, iterations, message, residual = np.zeros(0), 0, "no free parameters", 0.0
        converged = residual < tolerances.bfe
        result.starts.append(OracleStart(index, converged, residual, iterations, "" if converged else message))
        if not converged:
            logger.debug(f"Oracle start {index} stalled at residual {residual:.2e}: {message}")
            continue

        candidate = problem.half_braiding(x)
        if not verify_half_braiding(calc, candidate, tolerances.bfe).passed:
            continue
        if hom_half_braidings(calc, candidate, candidate, tolerances.rank).dimension != 1:
            continue
        if any(equivalent(calc, candidate, known, tolerances.rank) for known in result.solutions):
            continue
        candidate.name = f"oracle[{len(result.solutions)}]"
        result.solutions.append(candidate)

    logger.info(f"Oracle found {result.count} inequivalent half-braiding(s) on σ={problem.multiplicities}")
    return result
