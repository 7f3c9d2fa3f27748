"""Direct solution of the braiding-fusion equations as an independent count."""

import pytest

from config.settings import OracleConfig
from engine.commutant import equivalent, verify_half_braiding
from engine.fusion_data import full_view, subcategory
from engine.oracle import solve_bfe_direct
from models.errors import ConfigurationError


def count_blocks(blocks, multiplicities):
    return sum(1 for b in blocks if b.object_multiplicities == multiplicities)


class TestOracleCounts:

    @pytest.mark.parametrize("label", [0, 1])
    def test_vec_z2(self, vec_z2, vec_z2_calc, vec_z2_blocks, label):
        result = solve_bfe_direct(vec_z2_calc, full_view(vec_z2), {label: 1}, seed=0)
        assert result.count == 2
        assert result.count == count_blocks(vec_z2_blocks, {label: 1})

    def test_sigma_over_even_part_of_ising(self, ising, ising_calc, ising_even_blocks):
        result = solve_bfe_direct(ising_calc, subcategory(ising, [0, 2]), {1: 1}, seed=0)
        assert result.count == 2
        assert result.count == count_blocks(ising_even_blocks, {1: 1})

    def test_tau_in_fibonacci_center(self, fibonacci, fibonacci_calc, fibonacci_blocks):
        result = solve_bfe_direct(fibonacci_calc, full_view(fibonacci), {1: 1}, seed=0)
        assert result.count == 2
        assert result.count == count_blocks(fibonacci_blocks, {1: 1})

    def test_solutions_verify_and_match_tube_blocks(self, fibonacci, fibonacci_calc, fibonacci_half_braidings):
        result = solve_bfe_direct(fibonacci_calc, full_view(fibonacci), {1: 1}, seed=5)
        for hb in result.solutions:
            assert verify_half_braiding(fibonacci_calc, hb, 1e-7).passed
            matches = [x for x in fibonacci_half_braidings if equivalent(fibonacci_calc, hb, x)]
            assert len(matches) == 1

    def test_start_log(self, vec_z2, vec_z2_calc):
        oracle = OracleConfig(starts=4)
        result = solve_bfe_direct(vec_z2_calc, full_view(vec_z2), {1: 1}, oracle=oracle, seed=1)
        assert len(result.starts) == 4
        summary = result.get_summary_dict()
        assert summary["starts"] == 4
        assert summary["solutions"] == result.count

    def test_no_free_parameters(self, ising, ising_calc):
        # over C = Vec only E(1) = id remains
        result = solve_bfe_direct(ising_calc, subcategory(ising, [0]), {2: 1}, seed=0)
        assert result.count == 1
        assert result.starts[0].message == ""

    def test_object_too_large(self, fibonacci, fibonacci_calc):
        with pytest.raises(ConfigurationError):
            solve_bfe_direct(fibonacci_calc, full_view(fibonacci), {1: 1},
                             oracle=OracleConfig(max_sigma_dimension=1.5))
