#!/usr/bin/env python3
"""The relative tube algebra ⊕_{λ,ν∈D, μ∈C} Hom(λμ, μν) with its product, involution and trace."""

from typing import Dict, List, Optional, Tuple

import numpy as np

from config.logging_setup import get_logger
from engine.hom_calculus import HomCalculus
from models.errors import AlgebraMismatchError, ShapeMismatchError
from models.fusion_category import FusionCategoryData, SubcategoryView
from models.morphism import Morphism
from models.reports import CheckResult
from models.tube import TubeBasisIndex, TubeElement

logger = get_logger(__name__)

Sector = Tuple[int, int, int]


class TubeAlgebra:
    """Structure constants, involution and trace of Tube(C, D), computed once at build time."""

    def __init__(self, view: SubcategoryView, data: FusionCategoryData, calc: HomCalculus):
        self.view = view
        self.data = data
        self.calc = calc
        self.rank = data.rank
        self.basis: List[TubeBasisIndex] = []
        self.sectors: Dict[Sector, List[int]] = {}
        self._index: Dict[Tuple[int, int, int, int, int, int], int] = {}
        self._enumerate_basis()
        self.dimension = len(self.basis)
        self.unit_indices = {lam: self._index[(lam, 0, lam, lam, 0, 0)] for lam in range(self.rank)}
        self.weights = np.zeros(self.dimension)
        self.trace_weights = np.zeros(self.dimension)
        for lam, i in self.unit_indices.items():
            self.weights[i] = data.qdim[lam] ** 2
            self.trace_weights[i] = data.qdim[lam]
        # φ(xy) = φ(twist(y) x); the twist scales sector (λμν) by d(ν)/d(λ)
        self.twist_factors = np.array([data.qdim[b.nu] / data.qdim[b.lam] for b in self.basis])
        self.P = np.zeros((self.dimension,) * 3, dtype=complex)
        self.S = np.zeros((self.dimension, self.dimension), dtype=complex)
        self._gram: Optional[np.ndarray] = None

    def _enumerate_basis(self) -> None:
        N = self.data.N
        for lam in range(self.rank):
            for mu in self.view.members:
                for nu in range(self.rank):
                    t = 0
                    indices = []
                    for c in range(self.rank):
                        for row in range(N[mu, nu, c]):
                            for col in range(N[lam, mu, c]):
                                index = TubeBasisIndex(lam, mu, nu, t, c, row, col)
                                self._index[(lam, mu, nu, c, row, col)] = len(self.basis)
                                indices.append(len(self.basis))
                                self.basis.append(index)
                                t += 1
                    if indices:
                        self.sectors[(lam, mu, nu)] = indices

    # --- coordinates ---------------------------------------------------------

    def basis_morphism(self, i: int) -> Morphism:
        b = self.basis[i]
        X = self.calc.zero((b.lam, b.mu), (b.mu, b.nu))
        X.blocks[b.root][b.row, b.col] = 1.0
        return X

    def sector_morphism(self, coefficients: np.ndarray, lam: int, mu: int, nu: int) -> Morphism:
        X = self.calc.zero((lam, mu), (mu, nu))
        for i in self.sectors.get((lam, mu, nu), []):
            b = self.basis[i]
            X.blocks[b.root][b.row, b.col] = coefficients[i]
        return X

    def sector_matrices(self, coefficients: np.ndarray, lam: int, mu: int, nu: int) -> Dict[int, np.ndarray]:
        return self.sector_morphism(coefficients, lam, mu, nu).blocks

    def expand(self, X: Morphism) -> np.ndarray:
        """Tube coordinates of X ∈ Hom(λμ, μν)."""
        if len(X.source) != 2 or len(X.target) != 2 or X.source[1] != X.target[0]:
            raise ShapeMismatchError(f"{X.source}->{X.target} is not of the form λμ -> μν")
        lam, mu = X.source
        nu = X.target[1]
        vector = np.zeros(self.dimension, dtype=complex)
        for i in self.sectors.get((lam, mu, nu), []):
            b = self.basis[i]
            vector[i] = X.blocks[b.root][b.row, b.col]
        return vector

    def element(self, coefficients) -> TubeElement:
        return TubeElement(self, np.asarray(coefficients, dtype=complex))

    def basis_element(self, i: int) -> TubeElement:
        vector = np.zeros(self.dimension, dtype=complex)
        vector[i] = 1.0
        return self.element(vector)

    # --- structure ------------------------------------------------------------

    def _build(self) -> None:
        calc = self.calc
        members = self.view.members
        N = self.data.N
        morphisms = [self.basis_morphism(i) for i in range(self.dimension)]

        # products (λμν) · (νμ'ρ) land in Hom(λξ, ξρ) through T: ξ → μμ'
        for (lam, mu, nu), left in self.sectors.items():
            for mu2 in members:
                for rho in range(self.rank):
                    right = self.sectors.get((nu, mu2, rho))
                    if not right:
                        continue
                    terms = []
                    for xi in members:
                        for m in range(N[mu, mu2, xi]):
                            T = calc.vertex(mu, mu2, xi, m)
                            terms.append((calc.id_tensor((lam,), T), calc.tensor_id(T.adjoint(), (rho,))))
                    for i in left:
                        lifted = [(calc.tensor_id(morphisms[i], (mu2,)) @ inner, outer) for inner, outer in terms]
                        for j in right:
                            Y = calc.id_tensor((mu,), morphisms[j])
                            total = np.zeros(self.dimension, dtype=complex)
                            for first, outer in lifted:
                                total += self.expand(outer @ Y @ first)
                            self.P[i, j] = total

        for i, X in enumerate(morphisms):
            self.S[:, i] = self.expand(self._star_morphism(X))
        logger.info(f"Built tube algebra of dimension {self.dimension} over C={list(members)}")

    def _star_morphism(self, X: Morphism) -> Morphism:
        """Rotate X* ∈ Hom(μν, λμ) into Hom(νμ̄, μ̄λ) by bending both μ-legs."""
        calc = self.calc
        lam, mu = X.source
        nu = X.target[1]
        pair = calc.rigidity_pair(mu)
        mu_bar = pair.dual
        bend_in = calc.tensor_id(pair.r, (nu, mu_bar))
        middle = calc.tensor_all(calc.identity((mu_bar,)), X.adjoint(), calc.identity((mu_bar,)))
        bend_out = calc.id_tensor((mu_bar, lam), pair.rbar.adjoint())
        return bend_out @ middle @ bend_in

    def _check(self, x: TubeElement) -> np.ndarray:
        if x.algebra is not self:
            raise AlgebraMismatchError("element belongs to a different tube algebra")
        return x.coefficients

    def multiply(self, x: TubeElement, y: TubeElement) -> TubeElement:
        return self.element(np.einsum('i,j,ijk->k', self._check(x), self._check(y), self.P))

    def star(self, x: TubeElement) -> TubeElement:
        return self.element(self.S @ np.conj(self._check(x)))

    def phi(self, x: TubeElement) -> complex:
        return complex(self.weights @ self._check(x))

    def canonical_trace(self, x: TubeElement) -> complex:
        """τ = Σ_λ d(λ)·x_{(λ0λ)}, the trace that φ = τ(h·) twists by h = Σ_λ d(λ)·1_λ."""
        return complex(self.trace_weights @ self._check(x))

    def twist(self, x: TubeElement) -> TubeElement:
        return self.element(self.twist_factors * self._check(x))

    @property
    def unit(self) -> TubeElement:
        vector = np.zeros(self.dimension, dtype=complex)
        vector[list(self.unit_indices.values())] = 1.0
        return self.element(vector)

    def gram_matrix(self) -> np.ndarray:
        """G with ⟨x, y⟩ = conj(y)ᵀ G x."""
        if self._gram is None:
            weighted = np.einsum('ijk,k->ij', self.P, self.weights)
            self._gram = self.S.T @ weighted
        return self._gram

    def trace_form(self, x: TubeElement, y: TubeElement) -> complex:
        return complex(np.conj(self._check(y)) @ self.gram_matrix() @ self._check(x))

    def left_multiplication(self, x: TubeElement) -> np.ndarray:
        """Matrix of y ↦ x·y."""
        return np.einsum('i,ijk->kj', self._check(x), self.P)

    def right_multiplication(self, x: TubeElement) -> np.ndarray:
        """Matrix of y ↦ y·x."""
        return np.einsum('j,ijk->ki', self._check(x), self.P)

    @property
    def is_commutative(self) -> bool:
        return bool(np.allclose(self.P, self.P.transpose(1, 0, 2), atol=1e-10))

    def dump_basis(self) -> List[Dict]:
        entries = []
        for i, b in enumerate(self.basis):
            entries.append({
                "index": i,
                "sector": list(b.sector),
                "root": b.root,
                "morphism": self.calc.describe(self.basis_morphism(i)),
            })
        return entries


def expected_dimension(view: SubcategoryView) -> int:
    """Σ_{λ,μ,ν} dim Hom(λμ, μν) from the fusion ring alone."""
    N = view.parent.N
    return int(sum(
        np.dot(N[lam, mu, :], N[mu, nu, :])
        for lam in range(view.parent.rank) for mu in view.members for nu in range(view.parent.rank)
    ))


def build_tube(view: SubcategoryView, data: FusionCategoryData, calc: Optional[HomCalculus] = None) -> TubeAlgebra:
    if view.parent is not data:
        raise AlgebraMismatchError("subcategory view belongs to a different category")
    algebra = TubeAlgebra(view, data, calc or HomCalculus(data))
    algebra._build()
    return algebra


def tube_multiply(x: TubeElement, y: TubeElement) -> TubeElement:
    if x.algebra is not y.algebra:
        raise AlgebraMismatchError("elements belong to different tube algebras")
    return x.algebra.multiply(x, y)


def tube_star(x: TubeElement) -> TubeElement:
    return x.algebra.star(x)


def tube_phi(x: TubeElement) -> complex:
    return x.algebra.phi(x)


def trace_form(x: TubeElement, y: TubeElement) -> complex:
    if x.algebra is not y.algebra:
        raise AlgebraMismatchError("elements belong to different tube algebras")
    return x.algebra.trace_form(x, y)


def random_element(algebra: TubeAlgebra, rng: np.random.Generator) -> TubeElement:
    return algebra.element(rng.normal(size=algebra.dimension) + 1j * rng.normal(size=algebra.dimension))


def tube_checks(algebra: TubeAlgebra, seed: int = 0, samples: int = 5, tolerance: float = 1e-8) -> List[CheckResult]:
    """Axiom residuals of a built algebra on seeded random elements."""
    rng = np.random.default_rng(seed)
    unit = algebra.unit
    dim_d = float(np.sum(algebra.data.qdim ** 2))
    assoc = star_anti = star_inv = unit_def = trace_def = twist_def = 0.0
    for _ in range(samples):
        x, y, z = (random_element(algebra, rng) for _ in range(3))
        scale = x.norm() * y.norm() * z.norm()
        assoc = max(assoc, ((x @ y) @ z - x @ (y @ z)).norm() / scale)
        star_anti = max(star_anti, ((x @ y).star() - y.star() @ x.star()).norm() / (x.norm() * y.norm()))
        star_inv = max(star_inv, (x.star().star() - x).norm() / x.norm())
        unit_def = max(unit_def, (unit @ x - x).norm() / x.norm(), (x @ unit - x).norm() / x.norm())
        pair = x.norm() * y.norm()
        trace_def = max(trace_def, abs(algebra.canonical_trace(x @ y) - algebra.canonical_trace(y @ x)) / pair)
        twist_def = max(twist_def, abs(algebra.phi(x @ y) - algebra.phi(algebra.twist(y) @ x)) / pair)

    gram = algebra.gram_matrix()
    hermitian = (gram + gram.conj().T) / 2
    eigenvalues = np.linalg.eigvalsh(hermitian)
    checks = [
        CheckResult.equal("dimension_matches_fusion_ring", algebra.dimension, expected_dimension(algebra.view)),
        CheckResult.below("associativity", assoc, tolerance),
        CheckResult.below("star_antimultiplicative", star_anti, tolerance),
        CheckResult.below("star_involutive", star_inv, tolerance),
        CheckResult.below("unit_is_two_sided", unit_def, tolerance),
        CheckResult.below("canonical_trace_is_tracial", trace_def, tolerance),
        CheckResult.below("phi_is_twisted_trace", twist_def, tolerance),
        CheckResult.compare("phi_unit_equals_dimD", algebra.phi(unit).real, dim_d, 1e-9),
        CheckResult.below("gram_hermitian", float(np.max(np.abs(gram - gram.conj().T))), tolerance),
        CheckResult(
            "trace_form_positive_definite", bool(eigenvalues[0] > tolerance), float(eigenvalues[0]),
            tolerance, note=f"condition number {eigenvalues[-1] / eigenvalues[0]:.3g}" if eigenvalues[0] > 0 else "",
        ),
    ]
    return checks
