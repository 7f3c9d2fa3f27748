"""Modular data, modular invariants and the α-induction counting identities."""

import json

import numpy as np
import pytest

from config.settings import DEFAULT_CATALOG_DIR
from engine.alpha_counting import (
    check_center_theorem, check_extension, check_modular_data, check_relative_commutant_theorems,
    derived_dimensions, load_extension, load_modular, su2_level_k, verlinde_fusion,
)
from models.errors import ParseError
from models.modular import ExtensionSummary, trivial_extension


@pytest.fixture(scope="module")
def su2_10():
    return su2_level_k(10)


@pytest.fixture(scope="module")
def e6():
    return load_extension("e6")


def by_name(checks):
    return {c.name: c for c in checks}


class TestModularData:

    @pytest.mark.parametrize("k", [1, 2, 3, 10])
    def test_su2_modular_data_checks(self, k):
        checks = check_modular_data(su2_level_k(k))
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_su2_10_shape(self, su2_10):
        assert su2_10.rank == 11
        assert su2_10.qdim[1] == pytest.approx(2 * np.cos(np.pi / 12))
        assert su2_10.get_raw_data()["name"] == "su2_10"
        assert su2_10.to_dict()["labels"] == [str(j) for j in range(11)]

    def test_verlinde_reproduces_su2_fusion(self):
        N = np.round(verlinde_fusion(su2_level_k(2))).astype(int)
        # 1 ⊗ 1 = 0 ⊕ 2 at level 2
        assert N[1, 1].tolist() == [1, 0, 1]
        assert N[2, 2].tolist() == [1, 0, 0]

    def test_builtin_and_file_specs(self, tmp_path):
        assert load_modular("su2:3").rank == 4
        path = tmp_path / "modular.json"
        md = su2_level_k(2)
        path.write_text(json.dumps({
            "labels": md.labels,
            "S": md.S.real.tolist(),
            "T": [[t.real, t.imag] for t in md.T],
        }))
        loaded = load_modular(str(path))
        np.testing.assert_allclose(loaded.S, md.S)
        np.testing.assert_allclose(loaded.T, md.T)

    def test_bad_level(self):
        with pytest.raises(ParseError):
            su2_level_k(0)


class TestE6Extension:

    def test_counts_are_read(self, su2_10, e6):
        assert e6.counts == {"d0": 3, "dplus": 6, "dminus": 6, "dfull": 12}
        assert e6.theta == [0, 6]
        assert su2_10.rank == 11

    def test_modular_invariant_checks(self, su2_10, e6):
        checks = by_name(check_extension(su2_10, e6))
        assert all(c.passed for c in checks.values()), [n for n, c in checks.items() if not c.passed]
        assert checks["Z_commutes_with_S"].residual < 1e-9
        assert checks["Z_commutes_with_T"].residual < 1e-9

    def test_dimension_identities(self, su2_10, e6):
        checks = check_center_theorem(su2_10, e6) + check_relative_commutant_theorems(su2_10, e6)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
        named = by_name(checks)
        assert named["predicted_count_C_times_minus"].rhs == 66
        assert named["predicted_count_plus_times_ambichiral"].rhs == 18
        assert named["predicted_count_plus_times_minus"].rhs == 36
        assert named["center_of_chiral_count"].lhs == 33

    def test_derived_dimensions(self, su2_10, e6):
        dims = derived_dimensions(su2_10, e6)
        d_theta = 1 + su2_10.qdim[6]
        assert dims["d_theta"] == pytest.approx(d_theta)
        assert dims["dim_dplus"] == pytest.approx(su2_10.global_dimension / d_theta)
        assert dims["dim_d0"] == pytest.approx(su2_10.global_dimension / d_theta ** 2)

    def test_wrong_invariant_is_caught(self, su2_10):
        raw = json.loads((DEFAULT_CATALOG_DIR / "e6.json").read_text(encoding="utf-8"))
        raw["Z"][3][7] = 0
        checks = by_name(check_extension(su2_10, ExtensionSummary(raw)))
        assert not checks["Z_commutes_with_S"].passed
        assert not checks["trace_Z_equals_chiral_count"].passed or not checks["sum_Z_squared_equals_full_count"].passed

    def test_rank_mismatch(self, e6):
        checks = check_extension(su2_level_k(3), e6)
        assert len(checks) == 1 and not checks[0].passed

    def test_trivial_extension_is_consistent(self):
        md = su2_level_k(4)
        ext = trivial_extension(md.rank)
        checks = check_extension(md, ext) + check_relative_commutant_theorems(md, ext)
        assert all(c.passed for c in checks)

    def test_missing_counts(self):
        with pytest.raises(ParseError):
            ExtensionSummary({"theta": [0], "Z": [[1]], "counts": {"d0": 1}})

    def test_rank_of_C_is_cross_checked(self, su2_10, e6):
        assert e6.rank_c == 11
        named = by_name(check_relative_commutant_theorems(su2_10, e6))
        assert named["rank_C_matches_extension"].passed
        named = by_name(check_relative_commutant_theorems(su2_level_k(9), e6))
        assert not named["rank_C_matches_extension"].passed

    def test_rank_c_must_be_an_integer(self):
        with pytest.raises(ParseError) as info:
            ExtensionSummary({"theta": [0], "Z": [[1]], "rank_c": "eleven",
                              "counts": {"d0": 1, "dplus": 1, "dminus": 1, "dfull": 1}})
        assert info.value.location == "rank_c"
