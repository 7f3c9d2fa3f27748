#!/usr/bin/env python3
"""Loading, validating and restricting skeletal fusion category data."""

import json
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from config.logging_setup import get_logger
from config.settings import config
from models.errors import ClosureError, ParseError
from models.fusion_category import FusionCategoryData, SubcategoryView, ValidationReport

logger = get_logger(__name__)


def load_category(raw: Union[bytes, str]) -> FusionCategoryData:
    """Parse a category document. Axioms are not checked here; see ``validate``."""
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}")
    data = FusionCategoryData(document)
    logger.info(f"Loaded category '{data.name}' with rank {data.rank}")
    return data


def resolve_path(name: str, catalog_dir: Optional[Path] = None) -> Path:
    """A file path, or the name of a shipped catalog entry (with or without ``.json``)."""
    path = Path(name)
    if path.exists():
        return path
    catalog_dir = Path(catalog_dir or config.catalog_dir)
    for candidate in (catalog_dir / path.name, catalog_dir / f"{path.name}.json"):
        if candidate.exists():
            return candidate
    raise ParseError(f"no such file or catalog entry: {name}", "path")


def load_catalog(name: str, catalog_dir: Optional[Path] = None) -> FusionCategoryData:
    path = resolve_path(name, catalog_dir)
    logger.debug(f"Reading category from {path}")
    return load_category(path.read_bytes())


def _pentagon_residual(data: FusionCategoryData) -> float:
    r, N = data.rank, data.N
    F = data.F_entry
    ring = data.ring
    worst = 0.0
    for a, b, c, d in np.ndindex(r, r, r, r):
        for e in range(r):
            for f in ring.products(a, b):
                for g in ring.products(f, c):
                    if not N[g, d, e]:
                        continue
                    for k in range(r):
                        if not N[a, k, e]:
                            continue
                        for l in ring.products(c, d):
                            if not N[b, l, k]:
                                continue
                            # ((ab)c)d -> a(b(cd)) in two moves
                            lhs = np.einsum('BGDn,AnLM->ABGDLM', F(f, c, d, e, g, l), F(a, b, l, e, f, k))
                            rhs = np.zeros_like(lhs)
                            # and in three moves
                            for h in ring.products(b, c):
                                if not (N[a, h, g] and N[h, d, k]):
                                    continue
                                rhs += np.einsum('ABsp,pGrM,srDL->ABGDLM',
                                                 F(a, b, c, g, f, h), F(a, h, d, e, g, k), F(b, c, d, k, h, l))
                            if lhs.size:
                                worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def _unitarity_defects(data: FusionCategoryData) -> dict:
    defects = {}
    r = data.rank
    for a, b, c, d in np.ndindex(r, r, r, r):
        rows, cols, matrix = data.F_block(a, b, c, d)
        if not rows and not cols:
            continue
        key = f"F{a},{b},{c},{d}"
        if len(rows) != len(cols):
            defects[key] = 1.0
            continue
        defects[key] = float(np.max(np.abs(matrix @ matrix.conj().T - np.eye(len(rows)))))
    if data.R is not None:
        for (a, b, c), block in data.R.items():
            if block.size == 0:
                continue
            if block.shape[0] != block.shape[1]:
                defects[f"R{a},{b},{c}"] = 1.0
                continue
            defects[f"R{a},{b},{c}"] = float(np.max(np.abs(block @ block.conj().T - np.eye(block.shape[0]))))
    return defects


def _unit_normalization_defect(data: FusionCategoryData) -> float:
    worst = 0.0
    r = data.rank
    for a, b, c, d in np.ndindex(r, r, r, r):
        if 0 not in (a, b, c):
            continue
        rows, cols, matrix = data.F_block(a, b, c, d)
        if not rows:
            continue
        if len(rows) != len(cols):
            return 1.0
        worst = max(worst, float(np.max(np.abs(matrix - np.eye(len(rows))))))
    return worst


def _perron_frobenius(data: FusionCategoryData) -> np.ndarray:
    return np.array([
        float(np.max(np.abs(np.linalg.eigvals(data.ring.fusion_matrix(a))))) for a in range(data.rank)
    ])


def _hexagon_residual(data: FusionCategoryData) -> float:
    from engine.hom_calculus import HomCalculus

    calc = HomCalculus(data)
    worst = 0.0
    r = data.rank
    for a, b, c in np.ndindex(r, r, r):
        over = calc.braid(a, (b, c))
        over_steps = calc.tensor(calc.identity((b,)), calc.braid(a, (c,))) @ \
            calc.tensor(calc.braid(a, (b,)), calc.identity((c,)))
        under = calc.braid_under((a, b), c)
        under_steps = calc.tensor(calc.braid(a, (c,)), calc.identity((b,))) @ \
            calc.tensor(calc.identity((a,)), calc.braid(b, (c,)))
        worst = max(worst, over.distance(over_steps), under.distance(under_steps))
    return worst


def validate(data: FusionCategoryData) -> ValidationReport:
    """Evaluate every axiom and return the residuals; never raises on bad data."""
    report = ValidationReport(tolerance=data.tolerance)
    report.ring_failures = data.ring.axiom_failures()
    if report.ring_failures:
        logger.warning(f"Fusion ring axioms fail: {report.ring_failures[:3]}")

    report.unitarity_defects = _unitarity_defects(data)
    report.unit_normalization_defect = _unit_normalization_defect(data)
    report.pentagon_residual = _pentagon_residual(data)

    pf = _perron_frobenius(data)
    report.qdim_deviation = float(np.max(np.abs(pf - data.qdim)))
    report.qdim_symmetry_defect = float(max(
        [abs(data.qdim[0] - 1.0)] + [abs(data.qdim[a] - data.qdim[data.dual[a]]) for a in range(data.rank)]
    ))

    # braid morphisms assume a consistent fusion ring
    if data.R is not None and not report.ring_failures:
        report.hexagon_residual = _hexagon_residual(data)
    elif data.R is not None:
        report.hexagon_residual = float("inf")

    logger.info(f"Validated '{data.name}': pentagon {report.pentagon_residual:.2e}, "
                f"passed={report.passed}")
    return report


def subcategory(data: FusionCategoryData, members: Iterable[int]) -> SubcategoryView:
    """The full subcategory on ``members``; it must contain 0 and be closed under duals and fusion."""
    labels = sorted(set(int(m) for m in members))
    for m in labels:
        if not 0 <= m < data.rank:
            raise ClosureError(f"label {m} is outside [0, {data.rank})")
    if 0 not in labels:
        raise ClosureError("a subcategory must contain the unit label 0")
    member_set = set(labels)
    for a in labels:
        if data.dual[a] not in member_set:
            raise ClosureError(f"dual of {a} is {data.dual[a]}, which is not a member",
                               (a, data.dual[a], 0))
        for b in labels:
            for c in data.ring.products(a, b):
                if c not in member_set:
                    raise ClosureError(
                        f"{data.labels[a]} x {data.labels[b]} contains {data.labels[c]}, which is not a member",
                        (a, b, c),
                    )
    return SubcategoryView(data, tuple(labels))


def full_view(data: FusionCategoryData) -> SubcategoryView:
    return SubcategoryView(data, tuple(range(data.rank)))


def global_dim(view: Union[SubcategoryView, FusionCategoryData]) -> float:
    """Σ d(λ)² over the simples of the view."""
    if isinstance(view, FusionCategoryData):
        view = full_view(view)
    return float(sum(view.parent.qdim[m] ** 2 for m in view.members))
