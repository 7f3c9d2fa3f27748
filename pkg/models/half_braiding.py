#!/usr/bin/env python3
"""Half-braiding, simple block and verification report models."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from models.morphism import Morphism
from models.tube import TubeElement

# (λ, i): the i-th copy of the simple λ inside σ
Slot = Tuple[int, int]


@dataclass
class SimpleBlock:
    """A minimal central projection of the tube algebra with its matrix units."""
    z: TubeElement
    size: int
    d_sigma: Optional[float] = None
    object_multiplicities: Dict[int, int] = field(default_factory=dict)
    matrix_units: Dict[Tuple[Slot, Slot], TubeElement] = field(default_factory=dict)
    phi_z: Optional[float] = None

    @property
    def slots(self) -> List[Slot]:
        return [(lam, i) for lam in sorted(self.object_multiplicities)
                for i in range(self.object_multiplicities[lam])]

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "size": self.size,
            "d": self.d_sigma,
            "n": {str(k): v for k, v in sorted(self.object_multiplicities.items()) if v},
            "phi_z": self.phi_z,
        }


@dataclass
class HalfBraiding:
    """An object σ = ⊕ n_λ λ of D with unitaries E(β) ∈ Hom(σβ, βσ) for β in C.

    ``E[β][((λ, i), (μ, j))]`` is the component in Hom(λβ, βμ); absent components are zero.
    """
    object_multiplicities: Dict[int, int]
    members: Tuple[int, ...]
    E: Dict[int, Dict[Tuple[Slot, Slot], Morphism]]
    d_sigma: float = 0.0
    name: str = ""

    @property
    def slots(self) -> List[Slot]:
        return [(lam, i) for lam in sorted(self.object_multiplicities)
                for i in range(self.object_multiplicities[lam])]

    @property
    def size(self) -> int:
        return sum(self.object_multiplicities.values())

    def component(self, beta: int, source: Slot, target: Slot, N: np.ndarray) -> Morphism:
        found = self.E.get(beta, {}).get((source, target))
        if found is not None:
            return found
        lam, mu = source[0], target[0]
        rank = N.shape[0]
        return Morphism((lam, beta), (beta, mu),
                        {c: np.zeros((N[beta, mu, c], N[lam, beta, c]), dtype=complex) for c in range(rank)})

    def root_matrices(self, beta: int, N: np.ndarray) -> Dict[int, np.ndarray]:
        """E(β) restricted to each fusion root c, as a matrix from ⊕ Hom(c, λ_iβ) to ⊕ Hom(c, βμ_j)."""
        slots = self.slots
        rank = N.shape[0]
        result = {}
        for c in range(rank):
            col_sizes = [int(N[lam, beta, c]) for lam, _ in slots]
            row_sizes = [int(N[beta, mu, c]) for mu, _ in slots]
            matrix = np.zeros((sum(row_sizes), sum(col_sizes)), dtype=complex)
            col_offsets = np.concatenate([[0], np.cumsum(col_sizes)]).astype(int)
            row_offsets = np.concatenate([[0], np.cumsum(row_sizes)]).astype(int)
            for s, source in enumerate(slots):
                for t, target in enumerate(slots):
                    if not col_sizes[s] or not row_sizes[t]:
                        continue
                    block = self.component(beta, source, target, N).blocks[c]
                    matrix[row_offsets[t]:row_offsets[t + 1], col_offsets[s]:col_offsets[s + 1]] = block
            result[c] = matrix
        return result

    def unitarity_defect(self, N: np.ndarray) -> float:
        defect = 0.0
        for beta in self.members:
            for matrix in self.root_matrices(beta, N).values():
                if matrix.size == 0:
                    continue
                if matrix.shape[0] != matrix.shape[1]:
                    return float("inf")
                defect = max(defect, float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[1])))))
        return defect

    def spectrum_key(self, N: np.ndarray, digits: int = 4) -> Tuple:
        """Cheap equivalence invariant: multiplicities, rounded d and sorted spectra of the diagonal traces."""
        spectra = []
        for beta in self.members:
            values: List[complex] = []
            for lam, n in sorted(self.object_multiplicities.items()):
                for c in range(N.shape[0]):
                    if not n or N[lam, beta, c] != N[beta, lam, c] or not N[lam, beta, c]:
                        continue
                    # trace over the copies of λ is invariant under unitary mixing of them
                    total = sum(self.component(beta, (lam, i), (lam, i), N).blocks[c] for i in range(n))
                    values.extend(np.linalg.eigvals(total))
            spectra.append(tuple(sorted((round(v.real, digits) + 0.0, round(v.imag, digits) + 0.0) for v in values)))
        multiplicities = tuple(sorted((k, v) for k, v in self.object_multiplicities.items() if v))
        return multiplicities, round(self.d_sigma, digits), tuple(spectra)

    def get_summary_dict(self, N: Optional[np.ndarray] = None) -> Dict[str, Any]:
        summary: Dict[str, Any] = {
            "name": self.name,
            "n": {str(k): v for k, v in sorted(self.object_multiplicities.items()) if v},
            "d": self.d_sigma,
        }
        if N is not None:
            summary["E"] = {
                str(beta): {str(c): m.tolist() for c, m in self.root_matrices(beta, N).items() if m.size}
                for beta in self.members
            }
        return summary


@dataclass
class HalfBraidingCheck:
    """Residuals of the braiding-fusion equation and unitarity for one half-braiding."""
    bfe_residual: float
    unitarity_defect: float
    unit_defect: float
    tolerance: float
    worst_case: Optional[Tuple[int, int, int, int]] = None

    @property
    def passed(self) -> bool:
        return max(self.bfe_residual, self.unitarity_defect, self.unit_defect) < self.tolerance

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "bfe_residual": self.bfe_residual,
            "unitarity_defect": self.unitarity_defect,
            "unit_defect": self.unit_defect,
            "tolerance": self.tolerance,
            "worst_case": list(self.worst_case) if self.worst_case else None,
        }


@dataclass
class HomResult:
    """Intertwiner space between two half-braidings."""
    dimension: int
    basis: List[Dict[int, np.ndarray]]
    singular_values: List[float]
    threshold: float
    borderline: bool = False

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "threshold": self.threshold,
            "borderline": self.borderline,
            "smallest_singular_values": sorted(self.singular_values)[:4],
        }


@dataclass
class CommutantFusionTable:
    """Fusion rules of the relative commutant, indexed like the list of half-braidings."""
    N: np.ndarray
    unit: int
    conjugates: List[int]
    dimensions: List[float]
    checks: List[Any] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return int(self.N.shape[0])

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "unit": self.unit,
            "conjugates": list(self.conjugates),
            "dimensions": list(self.dimensions),
            "N": self.N.tolist(),
            "checks": {check.name: check.get_summary_dict() for check in self.checks},
        }


@dataclass
class OracleStart:
    """Outcome of one least-squares start of the direct solver."""
    index: int
    converged: bool
    residual: float
    iterations: int
    message: str = ""


@dataclass
class OracleResult:
    """Inequivalent irreducible half-braidings found by direct solution of the braiding-fusion equations."""
    multiplicities: Dict[int, int]
    solutions: List[HalfBraiding]
    starts: List[OracleStart]

    @property
    def count(self) -> int:
        return len(self.solutions)

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "sigma": {str(k): v for k, v in sorted(self.multiplicities.items()) if v},
            "solutions": len(self.solutions),
            "starts": len(self.starts),
            "converged_starts": sum(1 for s in self.starts if s.converged),
            "failed_starts": [
                {"index": s.index, "residual": s.residual, "message": s.message}
                for s in self.starts if not s.converged
            ],
        }
