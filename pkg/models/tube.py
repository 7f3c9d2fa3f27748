#!/usr/bin/env python3
"""Tube algebra basis and element models."""

from dataclasses import dataclass
from typing import Any, Dict, NamedTuple

import numpy as np

from models.errors import AlgebraMismatchError


class TubeBasisIndex(NamedTuple):
    """One matrix unit of Hom(λμ, μν) at fusion root ``root`` (tree ``row`` ← tree ``col``)."""
    lam: int
    mu: int
    nu: int
    t: int
    root: int
    row: int
    col: int

    @property
    def sector(self):
        return (self.lam, self.mu, self.nu)

    def label(self) -> str:
        return f"({self.lam},{self.mu},{self.nu})#{self.t}"


@dataclass(eq=False)
class TubeElement:
    """Coefficient vector of a tube algebra element over the canonical basis."""
    algebra: Any
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=complex)
        if self.coefficients.shape != (self.algebra.dimension,):
            raise AlgebraMismatchError(
                f"expected {self.algebra.dimension} coefficients, got {self.coefficients.shape}"
            )

    def _check_same(self, other: "TubeElement") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("elements belong to different tube algebras")

    def __add__(self, other: "TubeElement") -> "TubeElement":
        self._check_same(other)
        return TubeElement(self.algebra, self.coefficients + other.coefficients)

    def __sub__(self, other: "TubeElement") -> "TubeElement":
        self._check_same(other)
        return TubeElement(self.algebra, self.coefficients - other.coefficients)

    def __mul__(self, scalar: complex) -> "TubeElement":
        return TubeElement(self.algebra, self.coefficients * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "TubeElement") -> "TubeElement":
        self._check_same(other)
        return self.algebra.multiply(self, other)

    def star(self) -> "TubeElement":
        return self.algebra.star(self)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def sector_component(self, lam: int, mu: int, nu: int) -> Dict[int, np.ndarray]:
        """Per-root matrices of the component in Hom(λμ, μν)."""
        return self.algebra.sector_matrices(self.coefficients, lam, mu, nu)

    def get_summary_dict(self) -> Dict[str, Any]:
        nonzero = np.flatnonzero(np.abs(self.coefficients) > 1e-12)
        return {
            "dimension": int(self.algebra.dimension),
            "support": [self.algebra.basis[i].label() for i in nonzero],
            "norm": self.norm(),
        }
