#!/usr/bin/env python3
"""Modular data and extension summary models."""

from typing import Any, Dict, Optional

import numpy as np

from models.base import BaseModel
from models.errors import ParseError
from models.fusion_category import parse_number

COUNT_KEYS = ("d0", "dplus", "dminus", "dfull")


class ModularData(BaseModel):
    """S and T matrices of a modular category; T is kept as its diagonal."""

    REQUIRED_FIELDS = ("S", "T")
    KIND = "modular data"

    def _parse_data(self, data: Dict[str, Any]):
        self.name = str(data.get("name", ""))

        real = self._matrix(data["S"], "S")
        imag = self._matrix(data["S_imag"], "S_imag") if data.get("S_imag") is not None else np.zeros_like(real)
        if real.shape != imag.shape or real.shape[0] != real.shape[1]:
            raise ParseError("S must be a square matrix", "S")
        self.S = real + 1j * imag
        self.rank = self.S.shape[0]

        T = data["T"]
        if not isinstance(T, list) or len(T) != self.rank:
            raise ParseError(f"expected {self.rank} T entries", "T")
        self.T = np.array([self._complex(v, f"T[{i}]") for i, v in enumerate(T)])
        self.labels = [str(v) for v in data.get("labels", range(self.rank))]
        if abs(self.S[0, 0]) < 1e-14:
            raise ParseError("S_00 must be nonzero", "S[0][0]")

    @staticmethod
    def _matrix(value: Any, location: str) -> np.ndarray:
        if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
            raise ParseError("expected a list of rows", location)
        return np.array([[parse_number(v, f"{location}[{i}][{j}]") for j, v in enumerate(row)]
                         for i, row in enumerate(value)], dtype=float)

    @staticmethod
    def _complex(value: Any, location: str) -> complex:
        if isinstance(value, list) and len(value) == 2:
            return complex(parse_number(value[0], location), parse_number(value[1], location))
        return complex(parse_number(value, location))

    @property
    def qdim(self) -> np.ndarray:
        return (self.S[0, :] / self.S[0, 0]).real

    @property
    def global_dimension(self) -> float:
        return float(np.sum(self.qdim ** 2))

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "rank": self.rank,
            "qdim": self.qdim.tolist(),
            "global_dimension": self.global_dimension,
        }


class ExtensionSummary(BaseModel):
    """Dual canonical decomposition θ, modular invariant Z and the counts of the induced categories."""

    REQUIRED_FIELDS = ("theta", "Z", "counts")
    KIND = "extension summary"

    def _parse_data(self, data: Dict[str, Any]):
        self.name = str(data.get("name", ""))

        theta = data["theta"]
        if not isinstance(theta, list) or not theta or not all(isinstance(v, int) for v in theta):
            raise ParseError("expected a non-empty list of labels", "theta")
        self.theta = list(theta)

        Z = data["Z"]
        if not isinstance(Z, list) or not all(isinstance(row, list) for row in Z):
            raise ParseError("expected a list of rows", "Z")
        self.Z = np.array(Z)
        if self.Z.ndim != 2 or self.Z.shape[0] != self.Z.shape[1]:
            raise ParseError("Z must be a square matrix", "Z")

        counts = data["counts"]
        if not isinstance(counts, dict):
            raise ParseError("expected an object", "counts")
        missing = [key for key in COUNT_KEYS if key not in counts]
        if missing:
            raise ParseError(f"missing count(s) {', '.join(missing)}", "counts")
        self.counts = {key: int(counts[key]) for key in COUNT_KEYS}
        self.center_count: Optional[int] = int(counts["center"]) if counts.get("center") is not None else None

        dims = data.get("dims") or {}
        self.dims: Dict[str, float] = {
            key: parse_number(value, f"dims.{key}") for key, value in dims.items() if key in COUNT_KEYS
        }
        rank_c = data.get("rank_c")
        if rank_c is not None and (not isinstance(rank_c, int) or rank_c < 1):
            raise ParseError("expected a positive integer", "rank_c")
        # number of simples of the modular category the summary was written for
        self.rank_c: Optional[int] = rank_c

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "theta": list(self.theta),
            "counts": dict(self.counts),
            "dims": dict(self.dims),
            "rank_c": self.rank_c,
        }


def trivial_extension(rank: int) -> ExtensionSummary:
    """θ = id: every induced category is the modular category itself."""
    return ExtensionSummary({
        "name": "trivial",
        "theta": [0],
        "Z": np.eye(rank, dtype=int).tolist(),
        "counts": {"d0": rank, "dplus": rank, "dminus": rank, "dfull": rank},
    })