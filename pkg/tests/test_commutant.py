"""Block decomposition, half-braidings and the fusion rules of the relative commutant."""

from dataclasses import replace

import numpy as np
import pytest

from engine.commutant import (
    block_checks, braiding_half_braiding, center_basis, conjugate_half_braiding, decompose, equivalent,
    extract_half_braiding, fusion_table, hom_half_braidings, minimal_central_projections, tensor_half_braidings,
    trivial_half_braiding, verify_half_braiding,
)
from engine.fusion_data import full_view
from engine.tube_algebra import build_tube
from models.errors import BlockDimensionError, ClusteringAmbiguityError
from models.half_braiding import HalfBraiding

from tests.conftest import GOLDEN

SQRT2 = np.sqrt(2)


def dims(blocks):
    return sorted(round(b.d_sigma, 6) for b in blocks)


def dims_of(values):
    return sorted(round(float(v), 6) for v in values)


class TestCenter:

    @pytest.mark.parametrize("fixture, count", [
        ("ising_tube", 9),
        ("ising_even_tube", 6),
        ("fibonacci_tube", 4),
        ("vec_z2_tube", 4),
        ("ising_trivial_tube", 3),
    ])
    def test_center_dimension_is_block_count(self, request, fixture, count, tolerances):
        A = request.getfixturevalue(fixture)
        assert len(center_basis(A, tolerances)) == count
        assert len(minimal_central_projections(A, tolerances, seed=1)) == count

    def test_unresolvable_clustering_is_reported(self, vec_z2_tube, tolerances):
        with pytest.raises(ClusteringAmbiguityError):
            minimal_central_projections(vec_z2_tube, replace(tolerances, clustering=10.0))

    @pytest.mark.parametrize("fixture, count", [("ising_even_tube", 6), ("ising_tube", 9)])
    def test_conjugate_blocks_are_separated_for_every_seed(self, request, fixture, count, tolerances):
        # the real center basis pairs conjugate blocks; the random central element must not
        A = request.getfixturevalue(fixture)
        for seed in range(4):
            assert len(minimal_central_projections(A, tolerances, seed=seed)) == count

    def test_twisted_double_splits(self, semion, tolerances):
        A = build_tube(full_view(semion), semion)
        assert len(minimal_central_projections(A, tolerances, seed=0)) == 4

    def test_degenerate_trace_form_is_reported(self, vec_z2_tube, tolerances, monkeypatch):
        monkeypatch.setattr(vec_z2_tube, "gram_matrix", lambda: np.zeros((4, 4), dtype=complex))
        with pytest.raises(BlockDimensionError):
            center_basis(vec_z2_tube, tolerances)


class TestDecomposition:

    def test_ising_center(self, ising_blocks, ising_tube, tolerances):
        assert len(ising_blocks) == 9
        assert sorted(b.size for b in ising_blocks) == [1] * 8 + [2]
        assert sum(b.d_sigma ** 2 for b in ising_blocks) == pytest.approx(16.0, abs=1e-6)
        assert dims(ising_blocks) == dims_of([1, 1, 1, 1, 2, SQRT2, SQRT2, SQRT2, SQRT2])
        assert all(c.passed for c in block_checks(ising_tube, ising_blocks, tolerances))

    def test_even_part_of_ising(self, ising_even_blocks, ising_even_tube, tolerances):
        assert len(ising_even_blocks) == 6
        assert sum(b.d_sigma ** 2 for b in ising_even_blocks) == pytest.approx(8.0, abs=1e-6)
        assert all(c.passed for c in block_checks(ising_even_tube, ising_even_blocks, tolerances))

    def test_fibonacci_center(self, fibonacci_blocks):
        assert len(fibonacci_blocks) == 4
        assert sum(b.d_sigma ** 2 for b in fibonacci_blocks) == pytest.approx((1 + GOLDEN ** 2) ** 2, abs=1e-6)
        assert sum(b.d_sigma ** 2 for b in fibonacci_blocks) == pytest.approx(13.090170, abs=1e-6)
        assert dims(fibonacci_blocks) == dims_of([1, GOLDEN, GOLDEN, GOLDEN ** 2])

    def test_vec_z2_double(self, vec_z2_blocks):
        assert len(vec_z2_blocks) == 4
        assert all(b.size == 1 and b.d_sigma == pytest.approx(1.0) for b in vec_z2_blocks)

    def test_twisted_z2_double(self, semion, tolerances):
        # the associator sign survives in the product but not in the block structure
        A = build_tube(full_view(semion), semion)
        blocks = decompose(A, tolerances, seed=0)
        assert A.is_commutative
        assert len(blocks) == 4
        assert all(b.size == 1 and b.d_sigma == pytest.approx(1.0) for b in blocks)
        assert all(c.passed for c in block_checks(A, blocks, tolerances))

    def test_dimension_matches_object(self, fibonacci_blocks, fibonacci):
        for block in fibonacci_blocks:
            from_objects = sum(n * fibonacci.qdim[lam] for lam, n in block.object_multiplicities.items())
            assert block.d_sigma == pytest.approx(from_objects, abs=1e-6)

    def test_order_is_deterministic(self, ising_even_tube, ising_even_blocks, tolerances):
        again = decompose(ising_even_tube, tolerances, seed=0)
        for first, second in zip(ising_even_blocks, again):
            assert first.d_sigma == pytest.approx(second.d_sigma)
            assert first.object_multiplicities == second.object_multiplicities
            np.testing.assert_allclose(first.z.coefficients, second.z.coefficients, atol=1e-8)

    def test_order_does_not_depend_on_seed(self, fibonacci_tube, fibonacci_blocks, tolerances):
        other = decompose(fibonacci_tube, tolerances, seed=42)
        for first, second in zip(fibonacci_blocks, other):
            assert first.object_multiplicities == second.object_multiplicities
            np.testing.assert_allclose(first.z.coefficients, second.z.coefficients, atol=1e-6)


class TestHalfBraidings:

    @pytest.mark.parametrize("fixture, calc_fixture", [
        ("ising_even_half_braidings", "ising_calc"),
        ("fibonacci_half_braidings", "fibonacci_calc"),
        ("vec_z2_half_braidings", "vec_z2_calc"),
    ])
    def test_extracted_half_braidings_verify(self, request, fixture, calc_fixture):
        calc = request.getfixturevalue(calc_fixture)
        for hb in request.getfixturevalue(fixture):
            verdict = verify_half_braiding(calc, hb, 1e-7)
            assert verdict.passed, verdict.get_summary_dict()

    def test_ising_center_half_braidings_verify(self, ising_tube, ising_blocks, ising_calc, tolerances):
        for block in ising_blocks:
            hb = extract_half_braiding(ising_tube, block, tolerances)
            assert verify_half_braiding(ising_calc, hb, tolerances.bfe).passed

    def test_extracted_are_irreducible_and_distinct(self, fibonacci_half_braidings, fibonacci_calc):
        hbs = fibonacci_half_braidings
        for i, x in enumerate(hbs):
            for j, y in enumerate(hbs):
                expected = 1 if i == j else 0
                assert hom_half_braidings(fibonacci_calc, x, y).dimension == expected

    def test_braiding_is_a_half_braiding(self, fibonacci_calc, fibonacci, fibonacci_half_braidings):
        hb = braiding_half_braiding(fibonacci_calc, full_view(fibonacci), 1)
        assert verify_half_braiding(fibonacci_calc, hb).passed
        matches = [other for other in fibonacci_half_braidings if equivalent(fibonacci_calc, hb, other)]
        assert len(matches) == 1
        assert matches[0].object_multiplicities == {1: 1}

    def test_trivial_half_braiding(self, ising_calc, ising_even_tube, ising_even_half_braidings):
        unit = trivial_half_braiding(ising_calc, ising_even_tube.view)
        assert verify_half_braiding(ising_calc, unit).passed
        assert sum(equivalent(ising_calc, unit, hb) for hb in ising_even_half_braidings) == 1

    def test_corrupted_half_braiding_fails(self, fibonacci_calc, fibonacci_half_braidings):
        hb = next(h for h in fibonacci_half_braidings if h.object_multiplicities == {1: 1})
        component = hb.E[1][((1, 0), (1, 0))]
        broken = HalfBraiding(hb.object_multiplicities, hb.members,
                              {**hb.E, 1: {((1, 0), (1, 0)): component * np.exp(0.3j)}}, hb.d_sigma)
        verdict = verify_half_braiding(fibonacci_calc, broken)
        assert verdict.unitarity_defect < 1e-9
        assert not verdict.passed

    def test_conjugates_verify(self, fibonacci_calc, fibonacci_half_braidings):
        for hb in fibonacci_half_braidings:
            conj = conjugate_half_braiding(fibonacci_calc, hb)
            assert verify_half_braiding(fibonacci_calc, conj).passed
            assert conj.d_sigma == pytest.approx(hb.d_sigma)

    def test_tensor_products_verify(self, ising_calc, ising_even_half_braidings):
        hbs = ising_even_half_braidings
        product = tensor_half_braidings(ising_calc, hbs[-1], hbs[-2])
        assert product.d_sigma == pytest.approx(hbs[-1].d_sigma * hbs[-2].d_sigma)
        assert verify_half_braiding(ising_calc, product).passed


class TestFusionTable:

    def test_fibonacci_center(self, fibonacci_calc, fibonacci_tube, fibonacci_half_braidings, tolerances):
        table = fusion_table(fibonacci_calc, fibonacci_tube.view, fibonacci_half_braidings, tolerances)
        assert table.rank == 4
        assert all(c.passed for c in table.checks), [c.name for c in table.checks if not c.passed]
        N = table.N
        d = np.array(table.dimensions)
        np.testing.assert_allclose(np.einsum('ijk,k->ij', N, d), np.outer(d, d), atol=1e-6)
        assert table.conjugates == list(range(4))

    def test_even_part_of_ising(self, ising_calc, ising_even_tube, ising_even_half_braidings, tolerances):
        table = fusion_table(ising_calc, ising_even_tube.view, ising_even_half_braidings, tolerances)
        assert table.rank == 6
        assert all(c.passed for c in table.checks)
        assert table.unit >= 0

    def test_trivial_subcategory_recovers_category(self, ising, ising_calc, ising_trivial_tube, tolerances):
        blocks = decompose(ising_trivial_tube, tolerances, seed=0)
        hbs = [extract_half_braiding(ising_trivial_tube, block, tolerances) for block in blocks]
        labels = []
        for hb in hbs:
            assert list(hb.object_multiplicities.values()) == [1]
            labels.extend(hb.object_multiplicities)
        assert sorted(labels) == [0, 1, 2]
        table = fusion_table(ising_calc, ising_trivial_tube.view, hbs, tolerances)
        np.testing.assert_array_equal(table.N, ising.N[np.ix_(labels, labels, labels)])


def z2_character(hb, N):
    """(object label, sign of E(g)) of a half-braiding on Vec(Z/2)."""
    (lam,) = hb.object_multiplicities
    component = hb.component(1, (lam, 0), (lam, 0), N)
    value = component.blocks[1 - lam][0, 0]
    assert abs(abs(value) - 1) < 1e-8
    return lam, int(np.sign(value.real))


class TestHalfBraidingOperations:

    def test_abelian_double_has_all_sign_characters(self, vec_z2_half_braidings, vec_z2):
        characters = {z2_character(hb, vec_z2.N) for hb in vec_z2_half_braidings}
        assert characters == {(0, 1), (0, -1), (1, 1), (1, -1)}

    def test_conjugation_permutes_abelian_double(self, vec_z2_calc, vec_z2_half_braidings):
        hbs = vec_z2_half_braidings
        image = []
        for hb in hbs:
            conj = conjugate_half_braiding(vec_z2_calc, hb)
            matches = [k for k, other in enumerate(hbs) if hom_half_braidings(vec_z2_calc, conj, other).dimension]
            assert len(matches) == 1
            image.append(matches[0])
        assert sorted(image) == list(range(len(hbs)))
        # every character of Z/2 is real
        assert image == list(range(len(hbs)))

    def test_sign_characters_multiply(self, vec_z2_calc, vec_z2_half_braidings, vec_z2):
        by_character = {z2_character(hb, vec_z2.N): hb for hb in vec_z2_half_braidings}
        product = tensor_half_braidings(vec_z2_calc, by_character[(0, -1)], by_character[(1, -1)])
        assert z2_character(product, vec_z2.N) == (1, 1)
        assert hom_half_braidings(vec_z2_calc, product, by_character[(1, 1)]).dimension == 1
        assert hom_half_braidings(vec_z2_calc, product, by_character[(1, -1)]).dimension == 0

    def test_double_conjugate_is_equivalent(self, fibonacci_calc, fibonacci_half_braidings):
        for hb in fibonacci_half_braidings:
            twice = conjugate_half_braiding(fibonacci_calc, conjugate_half_braiding(fibonacci_calc, hb))
            assert hom_half_braidings(fibonacci_calc, twice, hb).dimension == 1

    @pytest.mark.parametrize("fixture, calc_fixture, tube_fixture", [
        ("fibonacci_half_braidings", "fibonacci_calc", "fibonacci_tube"),
        ("ising_even_half_braidings", "ising_calc", "ising_even_tube"),
    ])
    def test_trivial_is_a_tensor_unit(self, request, fixture, calc_fixture, tube_fixture):
        calc = request.getfixturevalue(calc_fixture)
        unit = trivial_half_braiding(calc, request.getfixturevalue(tube_fixture).view)
        for hb in request.getfixturevalue(fixture):
            assert hom_half_braidings(calc, tensor_half_braidings(calc, hb, unit), hb).dimension == 1
            assert hom_half_braidings(calc, tensor_half_braidings(calc, unit, hb), hb).dimension == 1
