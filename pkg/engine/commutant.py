#!/usr/bin/env python3
"""Block decomposition of the tube algebra and the half-braidings of the relative commutant."""

from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from scipy import linalg

from config.logging_setup import get_logger
from config.settings import ToleranceConfig
from engine.fusion_data import global_dim
from engine.hom_calculus import HomCalculus
from engine.tube_algebra import TubeAlgebra
from models.errors import (
    AssociativityError, BlockDimensionError, ClusteringAmbiguityError, DimensionMismatchError,
    ExtractionError, RankInconsistencyError,
)
from models.fusion_category import SubcategoryView
from models.half_braiding import (
    CommutantFusionTable, HalfBraiding, HalfBraidingCheck, HomResult, SimpleBlock, Slot,
)
from models.morphism import Morphism
from models.reports import CheckResult
from models.tube import TubeElement

logger = get_logger(__name__)

MAX_CLUSTER_ATTEMPTS = 5


def _numerical_rank(matrix: np.ndarray, tolerance: float) -> int:
    if matrix.size == 0:
        return 0
    s = np.linalg.svd(matrix, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tolerance * s[0]))


def _square_root(value: int, what: str) -> int:
    root = int(round(np.sqrt(value)))
    if root * root != value:
        raise RankInconsistencyError(f"{what} has dimension {value}, which is not a perfect square")
    return root


# --- center ------------------------------------------------------------------

def center_basis(A: TubeAlgebra, tolerances: Optional[ToleranceConfig] = None) -> List[TubeElement]:
    """Basis of the center, orthonormal for the trace form."""
    tolerances = tolerances or ToleranceConfig()
    n = A.dimension
    # rows (j, k): Σ_i z_i (P[i,j,k] - P[j,i,k]) = 0
    commutator = (A.P - A.P.transpose(1, 0, 2)).transpose(1, 2, 0).reshape(n * n, n)
    Z = linalg.null_space(commutator, rcond=tolerances.rank)
    gram = A.gram_matrix()
    H = Z.conj().T @ gram @ Z
    H = (H + H.conj().T) / 2
    w, V = linalg.eigh(H)
    if w.size and w.min() < tolerances.rank:
        raise BlockDimensionError(
            f"trace form restricted to the center is degenerate (smallest eigenvalue {w.min():.2e})"
        )
    orthonormal = Z @ V @ np.diag(1.0 / np.sqrt(w))
    logger.info(f"Center of tube algebra has dimension {orthonormal.shape[1]}")
    return [A.element(orthonormal[:, k]) for k in range(orthonormal.shape[1])]


def minimal_central_projections(A: TubeAlgebra, tolerances: Optional[ToleranceConfig] = None,
                                seed: int = 0) -> List[SimpleBlock]:
    """Minimal central projections via the spectrum of one random self-adjoint central element."""
    tolerances = tolerances or ToleranceConfig()
    rng = np.random.default_rng(seed)
    center = center_basis(A, tolerances)
    Zo = np.column_stack([z.coefficients for z in center])
    gram = A.gram_matrix()

    for attempt in range(MAX_CLUSTER_ATTEMPTS):
        # conjugate blocks share the real part of any real combination
        k = Zo.shape[1]
        h = A.element(Zo @ (rng.normal(size=k) + 1j * rng.normal(size=k)))
        h = (h + h.star()) * 0.5
        Lh = A.left_multiplication(h)
        Mh = Zo.conj().T @ gram @ Lh @ Zo
        eigenvalues, vectors = linalg.eigh((Mh + Mh.conj().T) / 2)
        gaps = np.diff(eigenvalues)
        if len(gaps) == 0 or np.min(gaps) > 10 * tolerances.clustering:
            break
        logger.warning(f"Central spectrum gap {np.min(gaps):.2e} too close to tolerance, "
                       f"retrying ({attempt + 1}/{MAX_CLUSTER_ATTEMPTS})")
    else:
        raise ClusteringAmbiguityError(
            f"central eigenvalues stay within {10 * tolerances.clustering:.1e} of each other after "
            f"{MAX_CLUSTER_ATTEMPTS} attempts; adjust the clustering tolerance"
        )

    blocks = []
    for k in range(vectors.shape[1]):
        v = A.element(Zo @ vectors[:, k])
        scale = A.trace_form(v @ v, v) / A.trace_form(v, v)
        p = v * (1.0 / scale)
        rank = _numerical_rank(A.left_multiplication(p), tolerances.rank)
        size = _square_root(rank, "central block")
        blocks.append(SimpleBlock(z=p, size=size, phi_z=float(A.phi(p).real)))
    blocks.sort(key=lambda b: b.phi_z)
    logger.info(f"Found {len(blocks)} minimal central projections")
    return blocks


def block_dimension(A: TubeAlgebra, block: SimpleBlock) -> float:
    """d(σ) = sqrt(dim C · φ(z))."""
    phi_z = float(A.phi(block.z).real)
    if phi_z <= 0:
        raise BlockDimensionError(f"φ(z) = {phi_z:.3e} is not positive")
    block.phi_z = phi_z
    block.d_sigma = float(np.sqrt(global_dim(A.view) * phi_z))
    return block.d_sigma


# --- matrix units ------------------------------------------------------------

def _corner_operator(A: TubeAlgebra, f: TubeElement) -> np.ndarray:
    """Matrix of x ↦ f x f."""
    return A.left_multiplication(f) @ A.right_multiplication(f)


def _split_corner(A: TubeAlgebra, f: TubeElement, n: int, tolerances: ToleranceConfig,
                  rng: np.random.Generator) -> List[TubeElement]:
    """Split a corner f A f ≅ M_n into n minimal projections with spectral Lagrange polynomials."""
    if n == 1:
        return [f]
    corner = _corner_operator(A, f)
    U, s, _ = np.linalg.svd(corner)
    U = U[:, :int(np.sum(s > tolerances.rank * s[0]))]
    gram = A.gram_matrix()

    for attempt in range(MAX_CLUSTER_ATTEMPTS):
        h = A.element(corner @ (rng.normal(size=A.dimension) + 1j * rng.normal(size=A.dimension)))
        a = (h + h.star()) * 0.5
        restricted = np.linalg.solve(U.conj().T @ gram @ U, U.conj().T @ gram @ A.left_multiplication(a) @ U)
        spectrum = np.sort(np.linalg.eigvals(restricted).real)
        clusters = spectrum.reshape(n, n)
        spread = float(np.max(clusters.max(axis=1) - clusters.min(axis=1)))
        centers = clusters.mean(axis=1)
        gap = float(np.min(np.diff(centers)))
        if spread < tolerances.clustering and gap > 10 * tolerances.clustering:
            break
        logger.warning(f"Corner spectrum not separated (spread {spread:.1e}, gap {gap:.1e}), retrying")
    else:
        raise ClusteringAmbiguityError("corner spectrum could not be separated; adjust the clustering tolerance")

    projections = []
    for i, t_i in enumerate(centers):
        g = f
        for j, t_j in enumerate(centers):
            if j != i:
                g = g @ ((a - f * t_j) * (1.0 / (t_i - t_j)))
        projections.append(g)
    return projections


def matrix_units(A: TubeAlgebra, block: SimpleBlock, tolerances: Optional[ToleranceConfig] = None,
                 seed: int = 0) -> Dict[Tuple[Slot, Slot], TubeElement]:
    """A full system of matrix units e_{(λ,i),(μ,j)} of the block, indexed by copies of simple objects."""
    tolerances = tolerances or ToleranceConfig()
    rng = np.random.default_rng(seed)
    diagonal: List[Tuple[Slot, TubeElement]] = []
    multiplicities: Dict[int, int] = {}
    for lam in range(A.rank):
        f = block.z @ A.basis_element(A.unit_indices[lam])
        if f.norm() < tolerances.rank:
            continue
        n = _square_root(_numerical_rank(_corner_operator(A, f), tolerances.rank), f"corner of {lam}")
        if n == 0:
            continue
        multiplicities[lam] = n
        for i, g in enumerate(_split_corner(A, f, n, tolerances, rng)):
            diagonal.append(((lam, i), g))

    if sum(multiplicities.values()) != block.size:
        raise RankInconsistencyError(
            f"corner ranks give {sum(multiplicities.values())} copies but the block has size {block.size}"
        )

    reference_slot, f0 = diagonal[0]
    phi_f0 = A.phi(f0).real
    column: Dict[Slot, TubeElement] = {reference_slot: f0}
    for slot, g in diagonal[1:]:
        candidates = [g @ A.basis_element(j) @ f0 for j in range(A.dimension)]
        y = max(candidates, key=lambda x: x.norm())
        norm = A.phi(y.star() @ y).real / phi_f0
        column[slot] = y * (1.0 / np.sqrt(norm))

    units = {}
    for s, e_s in column.items():
        for t, e_t in column.items():
            units[(s, t)] = e_s @ e_t.star()
    block.object_multiplicities = multiplicities
    block.matrix_units = units
    return units


def check_dimension(A: TubeAlgebra, block: SimpleBlock, tolerance: float) -> float:
    """Cross-check d(σ) from the trace against Σ n_λ d(λ)."""
    from_objects = float(sum(n * A.data.qdim[lam] for lam, n in block.object_multiplicities.items()))
    if abs(from_objects - block.d_sigma) > tolerance:
        raise DimensionMismatchError(
            f"block dimension {block.d_sigma:.9f} from φ disagrees with Σ n_λ d(λ) = {from_objects:.9f}"
        )
    return from_objects


def decompose(A: TubeAlgebra, tolerances: Optional[ToleranceConfig] = None, seed: int = 0) -> List[SimpleBlock]:
    """All simple blocks with dimensions and matrix units, in a platform-independent order."""
    tolerances = tolerances or ToleranceConfig()
    blocks = minimal_central_projections(A, tolerances, seed)
    for k, block in enumerate(blocks):
        block_dimension(A, block)
        matrix_units(A, block, tolerances, seed + k + 1)
        check_dimension(A, block, tolerances.rounding)

    def order(block: SimpleBlock):
        n = tuple(block.object_multiplicities.get(lam, 0) for lam in range(A.rank))
        pattern = tuple(np.round(block.z.coefficients.real, 6) + 0.0) + tuple(np.round(block.z.coefficients.imag, 6) + 0.0)
        return round(block.d_sigma, 6), n, pattern

    blocks.sort(key=order)
    return blocks


def block_checks(A: TubeAlgebra, blocks: List[SimpleBlock], tolerances: ToleranceConfig) -> List[CheckResult]:
    """Projection and matrix-unit relations of a decomposition."""
    unit = A.unit
    total = blocks[0].z * 0.0
    projection = orthogonal = units_rel = adjoint_rel = central = 0.0
    basis = [A.basis_element(i) for i in range(A.dimension)]
    for j, block in enumerate(blocks):
        z = block.z
        total = total + z
        projection = max(projection, (z @ z - z).norm(), (z.star() - z).norm())
        central = max(central, max((z @ b - b @ z).norm() for b in basis))
        for k in range(j + 1, len(blocks)):
            orthogonal = max(orthogonal, (z @ blocks[k].z).norm())
        units = block.matrix_units
        for (s, t), e in units.items():
            adjoint_rel = max(adjoint_rel, (e.star() - units[(t, s)]).norm())
            for (s2, t2), e2 in units.items():
                expected = units[(s, t2)] if t == s2 else e * 0.0
                units_rel = max(units_rel, (e @ e2 - expected).norm())
        diagonal_sum = sum((units[(s, s)] for s in block.slots), z * 0.0)
        units_rel = max(units_rel, (diagonal_sum - z).norm())

    dim_c, dim_d = global_dim(A.view), float(np.sum(A.data.qdim ** 2))
    tol = tolerances.algebra
    return [
        CheckResult.below("projections_sum_to_unit", (total - unit).norm(), tol),
        CheckResult.below("projections_are_selfadjoint_idempotents", projection, tol),
        CheckResult.below("projections_are_central", central, tol),
        CheckResult.below("projections_mutually_orthogonal", orthogonal, tol),
        CheckResult.below("matrix_unit_relations", units_rel, tol),
        CheckResult.below("matrix_unit_adjoints", adjoint_rel, tol),
        CheckResult.equal("block_sizes_squared_sum_to_dimension",
                          sum(b.size ** 2 for b in blocks), A.dimension),
        CheckResult.compare("sum_d_squared_equals_dimC_dimD",
                            float(sum(b.d_sigma ** 2 for b in blocks)), dim_c * dim_d, tolerances.rounding),
        CheckResult.compare("phi_unit_equals_dimD", A.phi(unit).real, dim_d, tolerances.validation),
    ]


# --- half-braidings ------------------------------------------------------------

def extract_half_braiding(A: TubeAlgebra, block: SimpleBlock,
                          tolerances: Optional[ToleranceConfig] = None) -> HalfBraiding:
    """Read E(β)_{(λ,i),(μ,j)} off the matrix units by undoing their scalar prefactor."""
    tolerances = tolerances or ToleranceConfig()
    qdim = A.data.qdim
    dim_c = global_dim(A.view)
    E: Dict[int, Dict[Tuple[Slot, Slot], Morphism]] = {}
    for beta in A.view.members:
        components = {}
        for (s, t), e in block.matrix_units.items():
            lam, mu = s[0], t[0]
            if (lam, beta, mu) not in A.sectors:
                continue
            prefactor = block.d_sigma / (dim_c * np.sqrt(qdim[lam] * qdim[mu])) * qdim[beta]
            components[(s, t)] = A.sector_morphism(e.coefficients, lam, beta, mu) * (1.0 / prefactor)
        E[beta] = components

    hb = HalfBraiding(dict(block.object_multiplicities), tuple(A.view.members), E, block.d_sigma)
    defect = hb.unitarity_defect(A.data.N)
    if defect > tolerances.bfe:
        raise ExtractionError(f"extracted half-braiding is not unitary (defect {defect:.2e})")
    return hb


def bfe_defects(calc: HomCalculus, hb: HalfBraiding, skip_unit: bool = False) -> Iterator[Tuple[Tuple[int, int, int, int], Morphism]]:
    """(X⊗1)E(β₃) - (1⊗E(β₂))(E(β₁)⊗1)(1⊗X) for every vertex X: β₃ → β₁β₂ and pair of copies."""
    N = calc.N
    slots = hb.slots
    members = hb.members
    for b1 in members:
        for b2 in members:
            if skip_unit and 0 in (b1, b2):
                continue
            for b3 in calc.data.ring.products(b1, b2):
                for m in range(N[b1, b2, b3]):
                    X = calc.vertex(b1, b2, b3, m)
                    for s in slots:
                        lifted_X = calc.id_tensor((s[0],), X)
                        for t in slots:
                            lhs = calc.tensor_id(X, (t[0],)) @ hb.component(b3, s, t, N)
                            rhs = calc.zero(lhs.source, lhs.target)
                            for k in slots:
                                first = calc.tensor_id(hb.component(b1, s, k, N), (b2,))
                                second = calc.id_tensor((b1,), hb.component(b2, k, t, N))
                                rhs = rhs + second @ first @ lifted_X
                            yield (b1, b2, b3, m), lhs - rhs


def verify_half_braiding(calc: HomCalculus, hb: HalfBraiding, tolerance: float = 1e-7) -> HalfBraidingCheck:
    """Residuals of E(0) = 1, unitarity and the braiding-fusion equation."""
    N = calc.N
    slots = hb.slots
    unit_defect = 0.0
    for s in slots:
        for t in slots:
            component = hb.component(0, s, t, N)
            for c, block in component.blocks.items():
                expected = np.eye(*block.shape) if (s == t and c == s[0]) else np.zeros(block.shape)
                if block.size:
                    unit_defect = max(unit_defect, float(np.max(np.abs(block - expected))))

    worst, worst_case = 0.0, None
    for case, difference in bfe_defects(calc, hb):
        residual = difference.max_abs()
        if residual > worst:
            worst, worst_case = residual, case
    return HalfBraidingCheck(worst, hb.unitarity_defect(N), unit_defect, tolerance, worst_case)


def trivial_half_braiding(calc: HomCalculus, view: SubcategoryView) -> HalfBraiding:
    """The unit object with E(β) = id_β."""
    E = {}
    for beta in view.members:
        component = calc.zero((0, beta), (beta, 0))
        component.blocks[beta][0, 0] = 1.0
        E[beta] = {((0, 0), (0, 0)): component}
    return HalfBraiding({0: 1}, tuple(view.members), E, 1.0, "trivial")


def braiding_half_braiding(calc: HomCalculus, view: SubcategoryView, label: int) -> HalfBraiding:
    """E(β) = c_{σ,β} from the R-symbols."""
    E = {beta: {((label, 0), (label, 0)): calc.braid(label, (beta,))} for beta in view.members}
    return HalfBraiding({label: 1}, tuple(view.members), E, float(calc.data.qdim[label]), f"braiding[{label}]")


def conjugate_half_braiding(calc: HomCalculus, hb: HalfBraiding) -> HalfBraiding:
    """Half-braiding of σ̄, rotating E(β)* with the rigidity pairs of the summands."""
    dual = calc.data.dual
    N = calc.N
    multiplicities: Dict[int, int] = {}
    for lam, n in hb.object_multiplicities.items():
        multiplicities[dual[lam]] = multiplicities.get(dual[lam], 0) + n
    E: Dict[int, Dict[Tuple[Slot, Slot], Morphism]] = {}
    for beta in hb.members:
        components = {}
        for s in hb.slots:
            for t in hb.slots:
                lam, mu = s[0], t[0]
                original = hb.component(beta, s, t, N)
                if original.norm() == 0:
                    continue
                pair_lam, pair_mu = calc.rigidity_pair(lam), calc.rigidity_pair(mu)
                lam_bar, mu_bar = pair_lam.dual, pair_mu.dual
                open_right = calc.id_tensor((lam_bar, beta), pair_mu.rbar)
                middle = calc.tensor_all(calc.identity((lam_bar,)), original.adjoint(), calc.identity((mu_bar,)))
                close_left = calc.tensor_id(pair_lam.r.adjoint(), (beta, mu_bar))
                components[((lam_bar, s[1]), (mu_bar, t[1]))] = close_left @ middle @ open_right
        E[beta] = components
    name = f"conj({hb.name})" if hb.name else ""
    return HalfBraiding(multiplicities, hb.members, E, hb.d_sigma, name)


def tensor_half_braidings(calc: HomCalculus, hb1: HalfBraiding, hb2: HalfBraiding) -> HalfBraiding:
    """(σ⊗σ', (E(β)⊗1)(1⊗E'(β))) with σ⊗σ' split into simples through fusion vertices."""
    N = calc.N
    # copies of ν in σ⊗σ': (λ-slot, λ'-slot, vertex index)
    copies: Dict[int, List[Tuple[Slot, Slot, int]]] = {}
    for s1 in hb1.slots:
        for s2 in hb2.slots:
            for nu in calc.data.ring.products(s1[0], s2[0]):
                for m in range(N[s1[0], s2[0], nu]):
                    copies.setdefault(nu, []).append((s1, s2, m))
    slots = [(nu, k, copy) for nu in sorted(copies) for k, copy in enumerate(copies[nu])]

    E: Dict[int, Dict[Tuple[Slot, Slot], Morphism]] = {}
    for beta in hb1.members:
        components = {}
        for nu, k, (s1, s2, m) in slots:
            lam, lam2 = s1[0], s2[0]
            split = calc.tensor_id(calc.vertex(lam, lam2, nu, m), (beta,))
            for rho, l, (t1, t2, m2) in slots:
                kappa, kappa2 = t1[0], t2[0]
                second = hb2.component(beta, s2, t2, N)
                first = hb1.component(beta, s1, t1, N)
                if second.norm() == 0 or first.norm() == 0:
                    continue
                merge = calc.id_tensor((beta,), calc.vertex(kappa, kappa2, rho, m2).adjoint())
                value = merge @ calc.tensor_id(first, (kappa2,)) @ calc.id_tensor((lam,), second) @ split
                if value.norm() > 0:
                    components[((nu, k), (rho, l))] = value
        E[beta] = components
    multiplicities = {nu: len(c) for nu, c in copies.items()}
    name = f"{hb1.name}*{hb2.name}" if hb1.name and hb2.name else ""
    return HalfBraiding(multiplicities, hb1.members, E, hb1.d_sigma * hb2.d_sigma, name)


def hom_half_braidings(calc: HomCalculus, hb1: HalfBraiding, hb2: HalfBraiding,
                       threshold: float = 1e-6) -> HomResult:
    """Intertwiners X: σ → σ' with E'(β)(X⊗1) = (1⊗X)E(β) for every β."""
    N = calc.N
    n1, n2 = hb1.object_multiplicities, hb2.object_multiplicities
    unknowns = [(lam, a, b) for lam in sorted(n1) if n2.get(lam)
                for a in range(n2[lam]) for b in range(n1[lam])]
    position = {u: i for i, u in enumerate(unknowns)}
    if not unknowns:
        return HomResult(0, [], [], threshold)

    rows: List[np.ndarray] = []
    for beta in hb1.members:
        for s in hb1.slots:
            lam, b = s
            for t in hb2.slots:
                mu, j = t
                # Σ_a E'_{(λ,a),(μ,j)} X_λ[a,b] - Σ_j' X_μ[j,j'] E_{(λ,b),(μ,j')}
                terms: List[Tuple[int, np.ndarray]] = []
                for a in range(n2.get(lam, 0)):
                    block = np.concatenate([m.ravel() for m in hb2.component(beta, (lam, a), t, N).blocks.values()])
                    terms.append((position[(lam, a, b)], block))
                for j2 in range(n1.get(mu, 0)):
                    if (mu, j, j2) not in position:
                        continue
                    block = np.concatenate([m.ravel() for m in hb1.component(beta, s, (mu, j2), N).blocks.values()])
                    terms.append((position[(mu, j, j2)], -block))
                if not terms:
                    continue
                equations = np.zeros((terms[0][1].size, len(unknowns)), dtype=complex)
                for index, coefficients in terms:
                    equations[:, index] += coefficients
                rows.append(equations)

    system = np.vstack(rows) if rows else np.zeros((0, len(unknowns)), dtype=complex)
    if system.shape[0] == 0:
        system = np.zeros((1, len(unknowns)), dtype=complex)
    _, s, Vh = np.linalg.svd(system, full_matrices=True)
    rank = int(np.sum(s > threshold))
    borderline = bool(np.any((s > threshold / 10) & (s < threshold * 10)))
    if borderline:
        logger.warning(f"Singular values {s[(s > threshold / 10) & (s < threshold * 10)]} are close to the "
                       f"rank threshold {threshold:.1e}")
    basis = []
    for vector in Vh[rank:].conj():
        X: Dict[int, np.ndarray] = {}
        for (lam, a, b), value in zip(unknowns, vector):
            X.setdefault(lam, np.zeros((n2[lam], n1[lam]), dtype=complex))[a, b] = value
        basis.append(X)
    return HomResult(len(unknowns) - rank, basis, [float(v) for v in s], threshold, borderline)


def equivalent(calc: HomCalculus, hb1: HalfBraiding, hb2: HalfBraiding, threshold: float = 1e-6) -> bool:
    """Equivalence of irreducible half-braidings: cheap invariants first, intertwiners decide."""
    if hb1.spectrum_key(calc.N) != hb2.spectrum_key(calc.N):
        return False
    return hom_half_braidings(calc, hb1, hb2, threshold).dimension > 0


def fusion_table(calc: HomCalculus, view: SubcategoryView, half_braidings: List[HalfBraiding],
                 tolerances: Optional[ToleranceConfig] = None) -> CommutantFusionTable:
    """N_{ij}^k = dim Hom(σ_i ⊗ σ_j, σ_k), with unit, duality, associativity and dimension checks."""
    tolerances = tolerances or ToleranceConfig()
    threshold = tolerances.rank
    n = len(half_braidings)

    def hom(x: HalfBraiding, y: HalfBraiding) -> int:
        return hom_half_braidings(calc, x, y, threshold).dimension

    trivial = trivial_half_braiding(calc, view)
    units = [k for k, hb in enumerate(half_braidings) if hom(trivial, hb) == 1]
    unit = units[0] if units else -1

    N = np.zeros((n, n, n), dtype=int)
    for i, hb_i in enumerate(half_braidings):
        for j, hb_j in enumerate(half_braidings):
            product = tensor_half_braidings(calc, hb_i, hb_j)
            for k, hb_k in enumerate(half_braidings):
                if product.object_multiplicities.keys() & hb_k.object_multiplicities.keys():
                    N[i, j, k] = hom(product, hb_k)
    logger.info(f"Computed fusion table of rank {n}")

    conjugates = []
    for hb in half_braidings:
        conj = conjugate_half_braiding(calc, hb)
        matches = [k for k, other in enumerate(half_braidings)
                   if conj.object_multiplicities.keys() & other.object_multiplicities.keys() and hom(conj, other) == 1]
        conjugates.append(matches[0] if len(matches) == 1 else -1)

    left = np.einsum('ijm,mkl->ijkl', N, N)
    right = np.einsum('jkm,iml->ijkl', N, N)
    if not np.array_equal(left, right):
        bad = tuple(int(v) for v in np.argwhere(left != right)[0])
        raise AssociativityError(f"fusion rules of the commutant are not associative at {bad}")

    d = np.array([hb.d_sigma for hb in half_braidings])
    dim_c = global_dim(view)
    dim_d = float(np.sum(calc.data.qdim ** 2))
    duality_ok = unit >= 0 and all(
        N[i, j, unit] == (1 if j == conjugates[i] else 0) for i in range(n) for j in range(n)
    )
    unit_ok = unit >= 0 and all(
        N[unit, i, k] == N[i, unit, k] == (1 if i == k else 0) for i in range(n) for k in range(n)
    )
    homomorphism = float(np.max(np.abs(np.einsum('ijk,k->ij', N, d) - np.outer(d, d)))) if n else 0.0
    checks = [
        CheckResult("unit_law", bool(unit_ok), 0.0 if unit_ok else 1.0, note=f"unit index {unit}"),
        CheckResult("duality_matches_conjugation", bool(duality_ok), 0.0 if duality_ok else 1.0),
        CheckResult("associativity", True, 0.0),
        CheckResult.compare("sum_d_squared_equals_dimC_dimD", float(np.sum(d ** 2)), dim_c * dim_d,
                            tolerances.rounding),
        CheckResult.below("dimension_is_ring_homomorphism", homomorphism, tolerances.rounding),
    ]
    return CommutantFusionTable(N, unit, conjugates, d.tolist(), checks)
