"""Tube(C, D): basis, product, involution and trace."""

import numpy as np
import pytest

from engine.fusion_data import full_view, load_catalog, subcategory
from engine.tube_algebra import (
    build_tube, expected_dimension, random_element, tube_checks, tube_multiply, tube_phi, tube_star, trace_form,
)
from models.errors import AlgebraMismatchError

from tests.conftest import GOLDEN

ALGEBRAS = ["ising_tube", "ising_even_tube", "ising_trivial_tube", "fibonacci_tube", "vec_z2_tube"]
CATEGORIES = ["ising", "fibonacci", "vec_z2", "vec_z2_twisted", "vec_z3"]


class TestDimensions:

    @pytest.mark.parametrize("fixture, dimension", [
        ("ising_tube", 12),
        ("ising_even_tube", 6),
        ("ising_trivial_tube", 3),
        ("fibonacci_tube", 7),
        ("vec_z2_tube", 4),
    ])
    def test_dimension(self, request, fixture, dimension):
        A = request.getfixturevalue(fixture)
        assert A.dimension == dimension
        assert expected_dimension(A.view) == dimension

    def test_sectors_of_ising(self, ising_tube):
        SIGMA = 1
        assert len(ising_tube.sectors[(SIGMA, 0, SIGMA)]) == 1
        # Hom(σσ, σσ) has roots 1 and ψ
        assert len(ising_tube.sectors[(SIGMA, SIGMA, SIGMA)]) == 2
        assert (0, 0, SIGMA) not in ising_tube.sectors


class TestAxioms:

    @pytest.mark.parametrize("fixture", ALGEBRAS)
    def test_all_checks_pass(self, request, fixture):
        A = request.getfixturevalue(fixture)
        checks = tube_checks(A, seed=7)
        failed = [c.name for c in checks if not c.passed]
        assert not failed

    @pytest.mark.parametrize("name", CATEGORIES)
    def test_all_checks_pass_on_every_catalog_category(self, name):
        data = load_catalog(name)
        checks = tube_checks(build_tube(full_view(data), data), seed=2)
        assert not [c.name for c in checks if not c.passed]

    def test_phi_is_twisted_by_the_end_labels(self, fibonacci_tube, fibonacci):
        # X ∈ Hom(1τ, ττ), Y ∈ Hom(ττ, τ1): the two orders close the same diagram
        A = fibonacci_tube
        x = A.basis_element(A.sectors[(0, 1, 1)][0])
        y = A.basis_element(A.sectors[(1, 1, 0)][0])
        forward, backward = tube_phi(x @ y), tube_phi(y @ x)
        assert abs(backward) > 1e-6
        assert forward / backward == pytest.approx(fibonacci.qdim[0] / fibonacci.qdim[1], abs=1e-9)
        assert A.canonical_trace(x @ y) == pytest.approx(A.canonical_trace(y @ x), abs=1e-9)
        assert forward == pytest.approx(tube_phi(A.twist(y) @ x), abs=1e-9)

    def test_phi_is_tracial_when_dimensions_are_trivial(self, vec_z2_tube):
        rng = np.random.default_rng(5)
        x, y = random_element(vec_z2_tube, rng), random_element(vec_z2_tube, rng)
        assert tube_phi(x @ y) == pytest.approx(tube_phi(y @ x), abs=1e-9)

    def test_canonical_trace_of_unit(self, fibonacci_tube):
        assert fibonacci_tube.canonical_trace(fibonacci_tube.unit) == pytest.approx(1 + GOLDEN, abs=1e-9)

    @pytest.mark.parametrize("fixture, dim_d", [
        ("ising_tube", 4.0),
        ("ising_even_tube", 4.0),
        ("fibonacci_tube", 1 + GOLDEN ** 2),
        ("vec_z2_tube", 2.0),
    ])
    def test_trace_of_unit_is_global_dimension(self, request, fixture, dim_d):
        A = request.getfixturevalue(fixture)
        assert tube_phi(A.unit) == pytest.approx(dim_d, abs=1e-9)

    def test_unit_summands_are_projections(self, fibonacci_tube):
        for i in fibonacci_tube.unit_indices.values():
            e = fibonacci_tube.basis_element(i)
            assert (e @ e - e).norm() < 1e-10
            assert (e.star() - e).norm() < 1e-10

    def test_star_is_conjugate_linear(self, ising_tube):
        rng = np.random.default_rng(3)
        x = random_element(ising_tube, rng)
        assert (tube_star(x * 2j) - tube_star(x) * (-2j)).norm() < 1e-10

    def test_trace_form_is_positive(self, ising_even_tube):
        rng = np.random.default_rng(11)
        x = random_element(ising_even_tube, rng)
        value = trace_form(x, x)
        assert value.real > 0
        assert abs(value.imag) < 1e-9
        assert value == pytest.approx(tube_phi(tube_star(x) @ x))

    def test_gram_matrix_is_positive_definite(self, fibonacci_tube):
        eigenvalues = np.linalg.eigvalsh(fibonacci_tube.gram_matrix())
        assert eigenvalues.min() > 1e-8


class TestStructure:

    def test_abelian_double_is_commutative(self, vec_z2_tube):
        assert vec_z2_tube.is_commutative

    def test_ising_tube_is_not_commutative(self, ising_tube):
        assert not ising_tube.is_commutative

    def test_elements_of_different_algebras_do_not_mix(self, ising_tube, ising_even_tube):
        x, y = ising_tube.unit, ising_even_tube.unit
        with pytest.raises(AlgebraMismatchError):
            tube_multiply(x, y)
        with pytest.raises(AlgebraMismatchError):
            x + y
        with pytest.raises(AlgebraMismatchError):
            ising_tube.element(np.zeros(5))

    def test_view_of_another_category_is_rejected(self, ising, fibonacci):
        with pytest.raises(AlgebraMismatchError):
            build_tube(full_view(ising), fibonacci)

    def test_subcategory_tube_embeds_in_full_tube(self, ising, ising_even_tube, ising_tube):
        # Tube({1,ψ}, Ising) is the span of the μ ∈ {1, ψ} sectors of Tube(Ising, Ising)
        assert subcategory(ising, [0, 2]).members == ising_even_tube.view.members
        full_sectors = {s: len(v) for s, v in ising_tube.sectors.items() if s[1] in (0, 2)}
        even_sectors = {s: len(v) for s, v in ising_even_tube.sectors.items()}
        assert full_sectors == even_sectors

    def test_dump_basis(self, vec_z2_tube):
        entries = vec_z2_tube.dump_basis()
        assert len(entries) == vec_z2_tube.dimension
        assert entries[0]["morphism"]["source"] == list(entries[0]["sector"][:2])
