#!/usr/bin/env python3
"""Skeletal fusion category data models."""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
import sympy

from models.base import BaseModel
from models.errors import ParseError

FKey = Tuple[int, int, int, int, int, int]
RKey = Tuple[int, int, int]

DEFAULT_TOLERANCE = 1e-9

_SYMPY_NAMES = {"golden": sympy.GoldenRatio, "phi": sympy.GoldenRatio, "pi": sympy.pi}


def parse_number(value: Any, location: str) -> float:
    """Read a real number given either as a JSON number or a sympy expression string."""
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}", location)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            expr = sympy.sympify(value, locals=_SYMPY_NAMES)
            return float(sympy.N(expr, 30))
        except (sympy.SympifyError, TypeError, ValueError) as e:
            raise ParseError(f"cannot evaluate expression {value!r}: {e}", location)
    raise ParseError(f"expected a number, got {type(value).__name__}", location)


def _parse_int(value: Any, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", location)
    return value


class FusionRing:
    """Fusion multiplicities N_{ab}^c together with the duality map."""

    def __init__(self, rank: int, dual: List[int], N: np.ndarray):
        self.rank = rank
        self.dual = list(dual)
        self.N = N

    @property
    def labels(self) -> range:
        return range(self.rank)

    def multiplicity(self, a: int, b: int, c: int) -> int:
        return int(self.N[a, b, c])

    def products(self, a: int, b: int) -> List[int]:
        """Labels c with N_{ab}^c > 0."""
        return [c for c in range(self.rank) if self.N[a, b, c] > 0]

    def fusion_matrix(self, a: int) -> np.ndarray:
        """(N_a)_{bc} = N_{ab}^c."""
        return self.N[a].astype(float)

    def axiom_failures(self) -> List[str]:
        """Unit law, duality, involutivity and associativity violations."""
        failures = []
        r, N, dual = self.rank, self.N, self.dual
        if dual[0] != 0:
            failures.append("dual(0) != 0")
        for a in range(r):
            if dual[dual[a]] != a:
                failures.append(f"dual is not involutive at {a}")
            for c in range(r):
                expected = 1 if a == c else 0
                if N[a, 0, c] != expected or N[0, a, c] != expected:
                    failures.append(f"unit law fails for ({a}, 0, {c})")
            for b in range(r):
                if N[a, b, 0] != (1 if b == dual[a] else 0):
                    failures.append(f"duality fails for ({a}, {b}, 0)")
        left = np.einsum('abe,ecd->abcd', N, N)
        right = np.einsum('bcf,afd->abcd', N, N)
        for a, b, c, d in zip(*np.nonzero(left != right)):
            failures.append(f"associativity fails for ({a}, {b}, {c}; {d})")
        return failures


class FusionCategoryData(BaseModel):
    """Labels, duals, fusion rules, quantum dimensions, F-symbols and optional R-symbols.

    F-symbols are stored per label sextuple ``(a, b, c, d, e, f)`` as a tensor
    ``F[α, β, μ, ν]`` with ``α: ab→e``, ``β: ec→d``, ``μ: bc→f``, ``ν: af→d``, so that the
    splitting tree ``|(ab→e)c→d⟩`` equals ``Σ F |a(bc→f)→d⟩``.
    R-symbols are stored per ``(a, b, c)`` as a matrix from ``ab→c`` vertices (columns) to
    ``ba→c`` vertices (rows).
    """

    REQUIRED_FIELDS = ("rank", "dual", "N", "qdim", "F")
    KIND = "top-level document"

    def _parse_data(self, data: Dict[str, Any]):

        self.rank = _parse_int(data["rank"], "rank")
        if self.rank < 1:
            raise ParseError("rank must be positive", "rank")
        self.name = str(data.get("name", ""))
        labels = data.get("labels", [str(i) for i in range(self.rank)])
        if len(labels) != self.rank:
            raise ParseError(f"expected {self.rank} labels, got {len(labels)}", "labels")
        self.labels = [str(label) for label in labels]

        dual = data["dual"]
        if not isinstance(dual, list) or len(dual) != self.rank:
            raise ParseError(f"expected a list of {self.rank} labels", "dual")
        self.dual = [self._label(v, f"dual[{i}]") for i, v in enumerate(dual)]
        if self.dual[0] != 0:
            raise ParseError("the unit label 0 must be its own dual", "dual[0]")

        self.N = np.zeros((self.rank,) * 3, dtype=int)
        for i, entry in enumerate(self._entries(data["N"], "N", 4)):
            loc = f"N[{i}]"
            a, b, c = (self._label(v, loc) for v in entry[:3])
            mult = _parse_int(entry[3], loc)
            if mult < 0:
                raise ParseError("multiplicity must be non-negative", loc)
            self.N[a, b, c] = mult

        qdim = data["qdim"]
        if not isinstance(qdim, list) or len(qdim) != self.rank:
            raise ParseError(f"expected a list of {self.rank} dimensions", "qdim")
        self.qdim = np.array([parse_number(v, f"qdim[{i}]") for i, v in enumerate(qdim)])

        self.tolerance = parse_number(data.get("tolerance", DEFAULT_TOLERANCE), "tolerance")
        self.F = self._parse_F(data["F"])
        self.R = self._parse_R(data["R"]) if data.get("R") is not None else None

    def _label(self, value: Any, location: str) -> int:
        label = _parse_int(value, location)
        if not 0 <= label < self.rank:
            raise ParseError(f"label {label} outside [0, {self.rank})", location)
        return label

    @staticmethod
    def _entries(value: Any, location: str, width: int) -> Iterator[list]:
        if not isinstance(value, list):
            raise ParseError("expected a list of entries", location)
        for i, entry in enumerate(value):
            if not isinstance(entry, list) or len(entry) != width:
                raise ParseError(f"expected {width} fields", f"{location}[{i}]")
            yield entry

    def _vertex_index(self, value: Any, a: int, b: int, c: int, location: str) -> int:
        idx = _parse_int(value, location)
        if not 0 <= idx < self.N[a, b, c]:
            raise ParseError(f"multiplicity index {idx} invalid for N_{{{a}{b}}}^{c}", location)
        return idx

    def _parse_F(self, entries: Any) -> Dict[FKey, np.ndarray]:
        F: Dict[FKey, np.ndarray] = {}
        given = set()
        for i, entry in enumerate(self._entries(entries, "F", 12)):
            loc = f"F[{i}]"
            a, b, c, d, e, f = (self._label(v, loc) for v in entry[:6])
            al = self._vertex_index(entry[6], a, b, e, loc)
            be = self._vertex_index(entry[7], e, c, d, loc)
            mu = self._vertex_index(entry[8], b, c, f, loc)
            nu = self._vertex_index(entry[9], a, f, d, loc)
            key = (a, b, c, d, e, f)
            if key not in F:
                F[key] = np.zeros(self.f_shape(*key), dtype=complex)
            F[key][al, be, mu, nu] = complex(parse_number(entry[10], loc), parse_number(entry[11], loc))
            given.add(key)

        # absent admissible entries: 1 for 1x1 blocks, 0 otherwise
        for a, b, c, d in np.ndindex(*(self.rank,) * 4):
            rows = sum(self.N[a, b, e] * self.N[e, c, d] for e in range(self.rank))
            cols = sum(self.N[b, c, f] * self.N[a, f, d] for f in range(self.rank))
            for e in range(self.rank):
                for f in range(self.rank):
                    key = (a, b, c, d, e, f)
                    shape = self.f_shape(*key)
                    if key in F or 0 in shape:
                        continue
                    F[key] = np.ones(shape, dtype=complex) if rows == cols == 1 else np.zeros(shape, dtype=complex)
        return F

    def _parse_R(self, entries: Any) -> Dict[RKey, np.ndarray]:
        R: Dict[RKey, np.ndarray] = {}
        for i, entry in enumerate(self._entries(entries, "R", 7)):
            loc = f"R[{i}]"
            a, b, c = (self._label(v, loc) for v in entry[:3])
            row = self._vertex_index(entry[3], b, a, c, loc)
            col = self._vertex_index(entry[4], a, b, c, loc)
            if (a, b, c) not in R:
                R[(a, b, c)] = np.zeros((self.N[b, a, c], self.N[a, b, c]), dtype=complex)
            R[(a, b, c)][row, col] = complex(parse_number(entry[5], loc), parse_number(entry[6], loc))
        # the unit braids trivially
        for a, b, c in np.ndindex(*(self.rank,) * 3):
            if (a, b, c) in R or (a != 0 and b != 0):
                continue
            if self.N[a, b, c] and self.N[b, a, c]:
                R[(a, b, c)] = np.eye(self.N[b, a, c], self.N[a, b, c], dtype=complex)
        return R

    def f_shape(self, a: int, b: int, c: int, d: int, e: int, f: int) -> Tuple[int, int, int, int]:
        N = self.N
        return (int(N[a, b, e]), int(N[e, c, d]), int(N[b, c, f]), int(N[a, f, d]))

    def F_entry(self, a: int, b: int, c: int, d: int, e: int, f: int) -> np.ndarray:
        """F tensor for one label sextuple; an empty or zero tensor when inadmissible."""
        key = (a, b, c, d, e, f)
        if key in self.F:
            return self.F[key]
        return np.zeros(self.f_shape(*key), dtype=complex)

    def F_block(self, a: int, b: int, c: int, d: int) -> Tuple[list, list, np.ndarray]:
        """The recoupling matrix for fixed external labels, rows (e,α,β) and columns (f,μ,ν)."""
        r, N = self.rank, self.N
        rows = [(e, al, be) for e in range(r) for al in range(N[a, b, e]) for be in range(N[e, c, d])]
        cols = [(f, mu, nu) for f in range(r) for mu in range(N[b, c, f]) for nu in range(N[a, f, d])]
        matrix = np.zeros((len(rows), len(cols)), dtype=complex)
        for i, (e, al, be) in enumerate(rows):
            for j, (f, mu, nu) in enumerate(cols):
                matrix[i, j] = self.F_entry(a, b, c, d, e, f)[al, be, mu, nu]
        return rows, cols, matrix

    def R_entry(self, a: int, b: int, c: int) -> np.ndarray:
        if self.R is None:
            raise ValueError("category has no R-symbols")
        return self.R.get((a, b, c), np.zeros((self.N[b, a, c], self.N[a, b, c]), dtype=complex))

    @property
    def ring(self) -> FusionRing:
        return FusionRing(self.rank, self.dual, self.N)

    @property
    def has_braiding(self) -> bool:
        return self.R is not None

    def label_name(self, label: int) -> str:
        return self.labels[label]

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "rank": self.rank,
            "labels": self.labels,
            "dual": self.dual,
            "qdim": self.qdim.tolist(),
            "braided": self.has_braiding,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True, eq=False)
class SubcategoryView:
    """A fusion- and dual-closed label subset of a parent category."""
    parent: FusionCategoryData
    members: Tuple[int, ...]

    def __contains__(self, label: int) -> bool:
        return label in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return self.members == (0,)

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.parent.rank

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "members": list(self.members),
            "names": [self.parent.labels[m] for m in self.members],
        }


@dataclass
class ValidationReport:
    """Residuals of every axiom the data is supposed to satisfy."""
    tolerance: float
    pentagon_residual: float = 0.0
    unitarity_defects: Dict[str, float] = field(default_factory=dict)
    unit_normalization_defect: float = 0.0
    hexagon_residual: Optional[float] = None
    qdim_deviation: float = 0.0
    qdim_symmetry_defect: float = 0.0
    ring_failures: List[str] = field(default_factory=list)

    @property
    def max_unitarity_defect(self) -> float:
        return max(self.unitarity_defects.values(), default=0.0)

    @property
    def passed(self) -> bool:
        residuals = [
            self.pentagon_residual,
            self.max_unitarity_defect,
            self.unit_normalization_defect,
            self.qdim_deviation,
            self.qdim_symmetry_defect,
        ]
        if self.hexagon_residual is not None:
            residuals.append(self.hexagon_residual)
        return not self.ring_failures and all(r < self.tolerance for r in residuals)

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "tolerance": self.tolerance,
            "pentagon_residual": self.pentagon_residual,
            "max_unitarity_defect": self.max_unitarity_defect,
            "unitarity_defects": dict(sorted(self.unitarity_defects.items())),
            "unit_normalization_defect": self.unit_normalization_defect,
            "hexagon_residual": self.hexagon_residual,
            "qdim_deviation": self.qdim_deviation,
            "qdim_symmetry_defect": self.qdim_symmetry_defect,
            "ring_failures": list(self.ring_failures),
        }
