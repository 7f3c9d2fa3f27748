"""End-to-end runs of the command-line subcommands."""

import json
import logging

import numpy as np
import pytest

from config.logging_setup import CompactArrays
from main import run
from tools.registry import ToolRegistry


@pytest.fixture(autouse=True)
def reset_logging():
    """run() points the root handler at the captured stderr of the current test."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.WARNING)


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv)
    return code, json.loads(out)


class TestRegistry:

    def test_all_subcommands_registered(self):
        registry = ToolRegistry().register_all()
        assert set(registry.get_tool_names()) == {
            "validate", "tube", "center", "commutant", "fusion", "oracle", "alpha-check",
        }
        stats = registry.get_tool_stats()
        assert stats["total_tools"] == 7
        assert stats["categories"]["commutant"]["count"] == 3

    def test_unknown_tool_is_a_usage_error(self):
        result = ToolRegistry().register_all().execute_tool("nope", {})
        assert result.exit_code == 2
        assert result.report["status"] == "error"


class TestCommands:

    def test_validate(self, capsys):
        code, report = invoke_json(capsys, "validate", "--category", "ising")
        assert code == 0
        assert report["status"] == "pass"
        assert report["checks"]["hexagon"]["passed"]

    def test_tube(self, capsys):
        code, report = invoke_json(capsys, "tube", "--category", "fibonacci", "--dump-basis")
        assert code == 0
        assert report["tube_dimension"] == 7
        assert report["expected_dimension"] == 7
        assert len(report["basis"]) == 7
        assert report["status"] == "pass"
        assert report["checks"]["canonical_trace_is_tracial"]["passed"]
        assert report["checks"]["phi_is_twisted_trace"]["passed"]

    def test_center(self, capsys):
        code, report = invoke_json(capsys, "center", "--category", "ising")
        assert code == 0
        assert report["center_dimension"] == 9
        assert len(report["projections"]) == 9

    def test_commutant_of_even_part(self, capsys):
        code, report = invoke_json(capsys, "commutant", "--category", "ising", "--sub", "0,2")
        assert code == 0, report["checks"]
        assert report["command"] == "commutant"
        assert report["block_count"] == 6
        assert report["sum_d_sq"] == pytest.approx(8.0, abs=1e-6)
        assert report["expected"] == pytest.approx(8.0)

    def test_commutant_over_trivial_subcategory(self, capsys):
        code, report = invoke_json(capsys, "commutant", "--category", "ising", "--sub", "0")
        assert code == 0
        assert report["block_count"] == 3
        assert report["checks"]["c_vec_recovers_d"]["passed"]

    def test_commutant_with_oracle(self, capsys):
        code, report = invoke_json(capsys, "commutant", "--category", "vec_z2", "--oracle", "--seed", "3")
        assert code == 0
        assert report["checks"]["oracle_count_0"]["passed"]
        assert report["checks"]["oracle_count_1"]["passed"]

    def test_fusion(self, capsys):
        code, report = invoke_json(capsys, "fusion", "--category", "fibonacci")
        assert code == 0
        assert len(report["objects"]) == 4

    def test_oracle(self, capsys):
        code, report = invoke_json(capsys, "oracle", "--category", "fibonacci", "--sigma", "1", "--seed", "0")
        assert code == 0
        assert report["count"] == 2

    def test_alpha_check(self, capsys):
        code, report = invoke_json(capsys, "alpha-check", "--modular", "su2:10", "--extension", "e6")
        assert code == 0, [n for n, c in report["checks"].items() if not c["passed"]]
        assert report["rank_C"] == 11
        assert report["counts"] == {"d0": 3, "dplus": 6, "dminus": 6, "dfull": 12}

    def test_text_format(self, capsys):
        code, out = invoke(capsys, "center", "--category", "vec_z2", "--format", "text")
        assert code == 0
        assert "=== SUMMARY ===" in out
        assert "=== CHECKS ===" in out

    def test_output_is_deterministic(self, capsys):
        _, first = invoke(capsys, "commutant", "--category", "fibonacci")
        _, second = invoke(capsys, "commutant", "--category", "fibonacci")
        assert first == second


class TestErrors:

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_unknown_flag(self, capsys):
        assert run(["tube", "--category", "ising", "--bogus"]) == 2

    def test_missing_required_flag(self, capsys):
        assert run(["tube"]) == 2

    def test_help_exits_cleanly(self, capsys):
        assert run(["--help"]) == 0

    def test_subset_not_closed(self, capsys):
        code, report = invoke_json(capsys, "commutant", "--category", "ising", "--sub", "0,1")
        assert code == 2
        assert report["status"] == "error"
        assert report["error"]["type"] == "ClosureError"

    def test_missing_file(self, capsys, tmp_path):
        code, report = invoke_json(capsys, "validate", "--category", str(tmp_path / "absent.json"))
        assert code == 2
        assert report["error"]["type"] == "ParseError"

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, report = invoke_json(capsys, "validate", "--category", str(path))
        assert code == 2
        assert report["status"] == "error"

    def test_bad_labels(self, capsys):
        code, report = invoke_json(capsys, "oracle", "--category", "fibonacci", "--sigma", "7")
        assert code == 2
        assert report["error"]["location"] == "--sigma"


class TestLogging:

    def test_matrix_dumps_are_folded(self):
        record = logging.LogRecord("engine", logging.DEBUG, __file__, 1, "gram = %s", (np.eye(4),), None)
        assert CompactArrays().filter(record)
        assert "\n" not in record.getMessage()

    def test_long_messages_are_cut(self):
        record = logging.LogRecord("engine", logging.DEBUG, __file__, 1, "x" * 5000, (), None)
        CompactArrays().filter(record)
        assert record.getMessage().endswith("[TRUNCATED]")

    def test_reports_stay_on_stdout(self, capsys):
        run(["--log-level", "DEBUG", "validate", "--category", "vec_z2"])
        captured = capsys.readouterr()
        json.loads(captured.out)
        assert "Loaded category" in captured.err
