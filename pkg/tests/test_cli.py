"""
Tests for the command-line surface.
"""

import json
import logging

import pytest
from click.testing import CliRunner

from app.cli import RunRequest, run
from app.cli.formatting import render_markdown
from app.main import main


@pytest.fixture
def runner():
    """Create a CLI runner with separate stderr."""
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def reset_app_logger():
    """Drop handlers bound to the runner streams after each test."""
    yield
    logging.getLogger("app").handlers = []


@pytest.fixture
def write_input(tmp_path):
    """Write a JSON input document and return its path."""

    def _write(document, name="input.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write


CHAIN = {"curves": ["E1", "E2"], "gram": [[-2, 1], [1, -1]]}


class TestRun:
    """Tests for run(RunRequest)."""

    def test_minkowski(self, write_input):
        """Test the minkowski command."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        result = run(RunRequest(command="minkowski", input_path=path))
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["e"] == ["1", "1/2", "1/2"]
        assert data["equality_case"] == "strict"

    def test_validate_invalid(self, write_input):
        """Test validate on an invalid config."""
        path = write_input({"curves": ["A", "B"], "gram": [[-2, 2], [2, -2]]})
        result = run(RunRequest(command="validate", input_path=path))
        assert result.exit_code == 1
        assert result.diagnostic.startswith("NotNegativeDefinite:")
        assert json.loads(result.output)["valid"] is False

    def test_validate_valid(self, write_input):
        """Test validate on a valid config."""
        result = run(RunRequest(command="validate", input_path=write_input(CHAIN)))
        assert result.exit_code == 0
        assert json.loads(result.output)["valid"] is True

    def test_oracle_colength(self, write_input):
        """Test the oracle-colength command."""
        path = write_input({"terms": [{"a": 1, "b": 1, "c": 1}], "n": 10})
        result = run(RunRequest(command="oracle-colength", input_path=path))
        assert result.exit_code == 0
        assert json.loads(result.output)["colength"] == 55

    def test_decompose(self, write_input):
        """Test the decompose command."""
        path = write_input({"curves": ["E1", "E2"], "gram": [[-2, 1], [1, -2]], "divisors": [[1, 0]]})
        data = json.loads(run(RunRequest(command="decompose", input_path=path)).output)
        assert data["decompositions"][0]["Delta"] == ["1", "1/2"]

    def test_volume_and_weighted(self, write_input):
        """Test volume with and without weights."""
        path = write_input(
            {
                "curves": ["E", "F"],
                "gram": [[-1, 0], [0, -1]],
                "branches": [[0], [1]],
                "weights": [1, 2],
                "divisors": [[1, 1]],
            }
        )
        plain = json.loads(run(RunRequest(command="volume", input_path=path)).output)
        weighted = json.loads(run(RunRequest(command="volume", input_path=path, weighted=True)).output)
        assert plain["volumes"][0]["volume"] == "2"
        assert weighted["volumes"][0]["volume"] == "3"

    def test_mixed(self, write_input):
        """Test the mixed command."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        data = json.loads(run(RunRequest(command="mixed", input_path=path)).output)
        assert data["form"]["matrix"] == [["1", "1/2"], ["1/2", "1/2"]]
        assert data["polynomial"]["variables"] == 2

    def test_rees_depth(self, write_input):
        """Test the certificate depth of rees."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [1, 1]]})
        data = json.loads(run(RunRequest(command="rees", input_path=path, depth=7)).output)
        assert len(data["certificates"]) == 7
        assert data["volumes_equal"] is True

    def test_rational_strings(self, write_input):
        """Test "p/q" coefficients in the input."""
        path = write_input({**CHAIN, "divisors": [["1/2", "2/4"]]})
        data = json.loads(run(RunRequest(command="gamma", input_path=path)).output)
        assert data["candidates"][0]["D"] == ["1/2", "1/2"]

    def test_toric_build(self, write_input):
        """Test the toric-build command."""
        path = write_input({"targets": [{"a": 2, "b": 3}]})
        data = json.loads(run(RunRequest(command="toric-build", input_path=path)).output)
        assert data["gram"] == [[-3, 1, 0], [1, -1, 1], [0, 1, -2]]
        assert data["target_volumes"] == ["1/6"]

    def test_oracle_tau_csv(self, write_input):
        """Test CSV output of oracle-tau."""
        path = write_input({"terms": [{"a": 1, "b": 2, "c": 1}], "target": {"a": 1, "b": 2}})
        result = run(RunRequest(command="oracle-tau", input_path=path, window=3, format="csv"))
        assert result.output == "m,tau\n1,1\n2,2\n3,3\n"

    def test_oracle_fit(self, write_input):
        """Test the oracle-fit command."""
        path = write_input({"terms": [{"a": 1, "b": 1, "c": 1}]})
        data = json.loads(run(RunRequest(command="oracle-fit", input_path=path, window=40)).output)
        assert data["fit"]["estimate"] == pytest.approx(1.0)
        assert data["lengths"][:3] == [1, 3, 6]

    def test_oracle_truncate_csv(self, write_input):
        """Test CSV output of oracle-truncate."""
        path = write_input({"terms": [{"a": 1, "b": 2, "c": 1}], "truncation": [1, 2]})
        result = run(RunRequest(command="oracle-truncate", input_path=path, window=10, format="csv"))
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "m,length_a1,length_a2,length"

    def test_markdown(self, write_input):
        """Test markdown output."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        result = run(RunRequest(command="minkowski", input_path=path, format="markdown"))
        assert result.output.startswith("# minkowski")
        assert "**equality_case**: strict" in result.output

    def test_markdown_verdict_rows(self, write_input):
        """Test that each verdict renders on one markdown line."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        result = run(RunRequest(command="minkowski", input_path=path, format="markdown"))
        lines = result.output.splitlines()
        first = (
            "  - **holds**: yes; **item**: 1; **lhs**: 1/4; **rhs**: 1/2; "
            "**statement**: e1^2 <= e0*e2 (i=1)"
        )
        assert first in lines
        assert not any(line.strip() == "-" for line in lines)

    def test_markdown_nested_lists(self):
        """Test markdown for lists nested in lists and dicts."""
        text = render_markdown("demo", {"rows": [[1, [2, 3]]], "items": [{"a": [{"b": 1}]}]})
        assert text.splitlines() == [
            "# demo",
            "",
            "- **items**:",
            "  - **#1**:",
            "    - **a**:",
            "      - **b**: 1",
            "- **rows**:",
            "  - **#1**:",
            "    - 1",
            "    - (2, 3)",
        ]

    def test_byte_stable(self, write_input):
        """Test that repeated runs give identical output."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        first = run(RunRequest(command="mixed", input_path=path)).output
        assert first == run(RunRequest(command="mixed", input_path=path)).output


class TestRunErrors:
    """Tests for exit codes and diagnostics."""

    def test_unknown_command(self, write_input):
        """Test an unknown command."""
        result = run(RunRequest(command="frobnicate", input_path=write_input(CHAIN)))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("UnknownCommand:")

    def test_missing_file(self, tmp_path):
        """Test a missing input file."""
        result = run(RunRequest(command="validate", input_path=tmp_path / "absent.json"))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("FileNotFound:")

    def test_bad_json(self, tmp_path):
        """Test malformed JSON."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        result = run(RunRequest(command="validate", input_path=path))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("SchemaError:")

    def test_schema_error(self, write_input):
        """Test a document missing required keys."""
        result = run(RunRequest(command="validate", input_path=write_input({"gram": [[-1]]})))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("SchemaError:")
        assert "\n" not in result.diagnostic

    def test_float_rejected(self, write_input):
        """Test that float coefficients are rejected."""
        path = write_input({**CHAIN, "divisors": [[0.5, 0]]})
        result = run(RunRequest(command="decompose", input_path=path))
        assert result.exit_code == 2

    def test_missing_divisors(self, write_input):
        """Test a command run without enough divisors."""
        result = run(RunRequest(command="minkowski", input_path=write_input(CHAIN)))
        assert result.exit_code == 2

    def test_input_error(self, write_input):
        """Test that input errors exit with 1."""
        path = write_input({**CHAIN, "divisors": [[1, -1]]})
        result = run(RunRequest(command="decompose", input_path=path))
        assert result.exit_code == 1
        assert result.diagnostic.startswith("NotEffective:")

    def test_csv_unsupported(self, write_input):
        """Test CSV for a command without sequence output."""
        path = write_input({**CHAIN, "divisors": [[1, 0]]})
        result = run(RunRequest(command="volume", input_path=path, format="csv"))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("UnsupportedFormat:")

    def test_missing_input(self):
        """Test a run without an input file."""
        assert run(RunRequest(command="validate")).exit_code == 2

    def test_gram_shape_is_schema_error(self, write_input):
        """Test that a mis-shaped gram is a schema error."""
        path = write_input({"curves": ["E1", "E2"], "gram": [[-2, 1]]})
        result = run(RunRequest(command="validate", input_path=path))
        assert result.exit_code == 2
        assert result.diagnostic.startswith("SchemaError:")
        assert "gram must be 2x2" in result.diagnostic

    def test_divisor_length_is_schema_error(self, write_input):
        """Test that a divisor of the wrong length is a schema error."""
        path = write_input({**CHAIN, "divisors": [[1, 0, 0]]})
        result = run(RunRequest(command="decompose", input_path=path))
        assert result.exit_code == 2
        assert "divisor 0 has 3 coefficients" in result.diagnostic


class TestMain:
    """Tests for the click entry point."""

    def test_minkowski(self, runner, write_input):
        """Test minkowski through the click entry point."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        result = runner.invoke(main, ["minkowski", "--input", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["e"] == ["1", "1/2", "1/2"]

    def test_validate_exit_one(self, runner, write_input):
        """Test the exit code of an invalid config."""
        path = write_input({"curves": ["A", "B"], "gram": [[-2, 2], [2, -2]]})
        result = runner.invoke(main, ["validate", "--input", str(path)])
        assert result.exit_code == 1
        assert "NotNegativeDefinite" in result.stderr

    def test_oracle_colength(self, runner, write_input):
        """Test oracle-colength through the click entry point."""
        path = write_input({"terms": [{"a": 1, "b": 1, "c": 1}], "n": 10})
        result = runner.invoke(main, ["oracle-colength", "--input", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["colength"] == 55

    def test_unknown_command(self, runner, write_input):
        """Test the diagnostic of an unknown command."""
        result = runner.invoke(main, ["nope", "--input", str(write_input(CHAIN))])
        assert result.exit_code == 2
        assert result.stderr.splitlines()[-1].startswith("UnknownCommand:")

    def test_csv_format(self, runner, write_input):
        """Test the --format csv option."""
        path = write_input({"terms": [{"a": 1, "b": 1, "c": 1}]})
        result = runner.invoke(main, ["oracle-fit", "--input", str(path), "--window", "8", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[:3] == ["m,length", "1,1", "2,3"]

    def test_markdown_flag(self, runner, write_input):
        """Test the --markdown flag."""
        path = write_input({**CHAIN, "divisors": [[1, 0], [0, 1]]})
        result = runner.invoke(main, ["minkowski", "--input", str(path), "--markdown"])
        assert result.exit_code == 0
        assert result.stdout.startswith("# minkowski\n")
