"""Tests for the CLI interface.

Tests command-line argument parsing, error handling, and exit codes.
Uses Click's CliRunner for testing CLI commands; complex files are written
with the ``gen`` command into a temporary directory.
"""

import re
from pathlib import Path

import pytest
from click.testing import CliRunner
from conftest import RP2_BLUE, RP2_RED, SPHERE_START

from morse_flowlines.cli import cli

CYCLIC_FIELD = """\
vertices: [1, 2, 3, 4]
maximal_simplices:
- [1, 2]
- [1, 3]
- [2, 3]
- [3, 4]
vector_field:
- - [1]
  - [1, 2]
- - [2]
  - [2, 3]
- - [3]
  - [1, 3]
"""

NON_FACET_PAIR = """\
vertices: [1, 2, 3]
maximal_simplices:
- [1, 2, 3]
vector_field:
- - [1]
  - [2, 3]
"""


@pytest.fixture
def cli_runner():
    """Create a Click CLI test runner."""
    return CliRunner()


@pytest.fixture
def preset(cli_runner, tmp_path):
    """Factory writing a preset complex file and returning its path."""

    def write(name: str, *args: str) -> Path:
        path = tmp_path / f"{name}.yaml"
        result = cli_runner.invoke(cli, ["gen", name, *args, "-o", str(path)])
        assert result.exit_code == 0, result.output
        return path

    return write


def lines(output: str, pattern: str) -> list[str]:
    """Output lines matching ``pattern``; log lines on stderr are dropped."""
    return [line for line in output.splitlines() if re.match(pattern, line)]


class TestCLIGroup:
    """Tests for the main CLI group."""

    def test_cli_help(self, cli_runner):
        """Test that --help displays help text."""
        result = cli_runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        assert "Morse Flowlines" in result.output
        for command in ("validate", "trace", "moduli", "homology", "d2-check", "gen"):
            assert command in result.output

    def test_cli_version(self, cli_runner):
        """Test that --version displays version."""
        result = cli_runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_cli_debug_flag(self, cli_runner):
        """Test that --debug flag is accepted."""
        result = cli_runner.invoke(cli, ["--debug", "--version"])
        assert result.exit_code == 0

    def test_cli_invalid_option(self, cli_runner):
        """Test error on invalid option."""
        result = cli_runner.invoke(cli, ["--invalid-option"])
        assert result.exit_code != 0


class TestGenCommand:
    """Tests for the gen command."""

    def test_writes_to_stdout(self, cli_runner):
        result = cli_runner.invoke(cli, ["gen", "simplex", "--dim", "1"])
        assert result.exit_code == 0
        assert "vertices: [0, 1]" in result.output

    def test_writes_file(self, preset):
        path = preset("rp2")
        text = path.read_text(encoding="utf-8")
        assert "vector_field" in text
        assert "maximal_simplices" in text

    def test_graph_needs_param(self, cli_runner):
        result = cli_runner.invoke(cli, ["gen", "graph", "--property", "max-edges"])
        assert result.exit_code == 2
        assert "--param" in result.output

    def test_graph_without_param(self, cli_runner):
        result = cli_runner.invoke(cli, ["gen", "graph", "--property", "bipartite", "--n", "3"])
        assert result.exit_code == 0
        assert "maximal_simplices" in result.output

    def test_unknown_preset(self, cli_runner):
        result = cli_runner.invoke(cli, ["gen", "torus"])
        assert result.exit_code == 2


class TestValidateCommand:
    """Tests for the validate command."""

    @pytest.mark.parametrize("name", ["sphere", "rp2", "two-triangles", "simplex"])
    def test_presets_are_valid(self, cli_runner, preset, name):
        result = cli_runner.invoke(cli, ["validate", str(preset(name))])
        assert result.exit_code == 0, result.output
        assert "✓ Valid complex" in result.output
        assert "✓ Gradient vector field" in result.output

    def test_rp2_summary(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["validate", str(preset("rp2"))])
        assert "f-vector (6, 15, 10)" in result.output
        assert "Euler characteristic 1" in result.output
        assert "3 critical simplices" in result.output

    def test_morse_values_reported(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["validate", str(preset("two-triangles"))])
        assert result.exit_code == 0
        assert "Morse values form a discrete Morse function" in result.output

    def test_malformed_yaml(self, cli_runner, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("vertices: [1, 2\n", encoding="utf-8")
        result = cli_runner.invoke(cli, ["validate", str(path)])
        assert result.exit_code == 2
        assert "✗ Validation failed" in result.output

    def test_closed_v_path(self, cli_runner, tmp_path):
        path = tmp_path / "cyclic.yaml"
        path.write_text(CYCLIC_FIELD, encoding="utf-8")
        result = cli_runner.invoke(cli, ["validate", str(path)])
        assert result.exit_code == 1
        assert "closed V-path" in result.output

    def test_invalid_pair(self, cli_runner, tmp_path):
        path = tmp_path / "bad-pair.yaml"
        path.write_text(NON_FACET_PAIR, encoding="utf-8")
        result = cli_runner.invoke(cli, ["validate", str(path)])
        assert result.exit_code == 1
        assert "Invalid vector field" in result.output

    def test_missing_file(self, cli_runner, tmp_path):
        result = cli_runner.invoke(cli, ["validate", str(tmp_path / "absent.yaml")])
        assert result.exit_code == 2


class TestCriticalCommand:
    def test_rp2(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["critical", str(preset("rp2"))])
        assert result.exit_code == 0
        assert lines(result.output, r"^\d\t") == ["0\t1", "1\t1-3", "2\t4-5-6"]


class TestFlowlinesCommand:
    """Tests for the flowlines command."""

    def test_index_one(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["flowlines", str(preset("rp2")), "--alpha", "1-3", "--gamma", "1"]
        )
        assert result.exit_code == 0
        found = lines(result.output, r"^[+-]\d\t")
        assert sorted(found) == sorted(["-1\tindex-1\t1-3,1", "+1\tindex-1\t1-3,3,2-3,2,1-2,1"])

    def test_index_two(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["flowlines", str(preset("rp2")), "--alpha", "4-5-6", "--gamma", "1"]
        )
        assert result.exit_code == 0
        found = lines(result.output, r"^[+-]\d\t")
        assert f"+1\tcritical\t{RP2_RED}" in found
        assert f"-1\tcritical\t{RP2_BLUE}" in found
        assert sum(1 for line in found if "\tcritical\t" in line) == 4

    def test_bad_simplex(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["flowlines", str(preset("rp2")), "--alpha", "a-b", "--gamma", "1"]
        )
        assert result.exit_code == 2

    def test_unknown_simplex(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["flowlines", str(preset("rp2")), "--alpha", "7-8-9", "--gamma", "1"]
        )
        assert result.exit_code == 2
        assert "✗ Enumeration failed" in result.output

    def test_noncritical_endpoint(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["flowlines", str(preset("rp2")), "--alpha", "1-2-3", "--gamma", "1"]
        )
        assert result.exit_code == 2


class TestTraceCommand:
    """Tests for the trace command."""

    def test_red_to_blue(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["trace", str(preset("rp2")), "--from", RP2_RED])
        assert result.exit_code == 0, result.output
        trace = lines(result.output, r"^[cf]\t")
        assert len(trace) == 18
        assert trace[0] == f"c\t+1\t{RP2_RED}"
        assert trace[-1] == f"f\t-1\t{RP2_BLUE}"
        assert "Terminated after 33 floperations" in result.output

    def test_sphere_cycle(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["trace", str(preset("sphere")), "--from", SPHERE_START, "--start", "f"]
        )
        assert result.exit_code == 0, result.output
        trace = lines(result.output, r"^[cf]\t")
        assert len(trace) == 13
        assert trace[0] == trace[-1]
        assert "Cycled back to the start after 12 steps" in result.output

    def test_insert_on_critical(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["trace", str(preset("rp2")), "--from", RP2_RED, "--start", "f"]
        )
        assert result.exit_code == 2
        assert "✗ Trace failed" in result.output

    def test_not_a_flowline(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["trace", str(preset("rp2")), "--from", "1-3,1"])
        assert result.exit_code == 2


class TestModuliCommand:
    """Tests for the moduli and export-dot commands."""

    def test_sphere_cycle(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["moduli", str(preset("sphere")), "--alpha", "1-2-3", "--gamma", "4"]
        )
        assert result.exit_code == 0, result.output
        assert "flowlines: 12" in result.output
        assert "components: 1" in result.output
        assert "cycle\t12 flowlines" in result.output
        assert "boundary flowlines: 0" in result.output

    def test_rp2_paths(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli,
            ["moduli", str(preset("rp2")), "--alpha", "4-5-6", "--gamma", "1", "--workers", "2"],
        )
        assert result.exit_code == 0, result.output
        assert "components: 2" in result.output
        assert "boundary flowlines: 4" in result.output

    def test_export_dot(self, cli_runner, preset, tmp_path):
        output = tmp_path / "moduli.dot"
        result = cli_runner.invoke(
            cli,
            [
                "export-dot",
                str(preset("rp2")),
                "--alpha",
                "4-5-6",
                "--gamma",
                "1",
                "-o",
                str(output),
            ],
        )
        assert result.exit_code == 0, result.output
        dot = output.read_text(encoding="utf-8")
        assert dot.startswith("graph moduli {")
        assert dot.count("[shape=doublecircle]") == 4
        assert dot.rstrip().endswith("}")


class TestAlgebraCommands:
    """Tests for the differential, d2-check and homology commands."""

    def test_top_differential(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["differential", str(preset("rp2")), "-p", "2"])
        assert result.exit_code == 0, result.output
        assert "rows: 1-3" in result.output
        assert "cols: 4-5-6" in result.output
        assert "-2" in lines(result.output, r"^-?\d")

    def test_simplicial_boundary(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["differential", str(preset("simplex")), "-p", "2", "--simplicial"]
        )
        assert result.exit_code == 0
        assert lines(result.output, r"^-?\d") == ["1", "-1", "1"]

    def test_d2_check(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["d2-check", str(preset("rp2")), "--random-fields", "3", "--seed", "7"]
        )
        assert result.exit_code == 0, result.output
        assert "✓ d^2 = 0 for the file field and 3 random gradient fields" in result.output

    def test_homology_rp2(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["homology", str(preset("rp2"))])
        assert result.exit_code == 0, result.output
        assert lines(result.output, r"^H_") == ["H_0 = Z", "H_1 = Z/2", "H_2 = 0"]

    def test_homology_oracle(self, cli_runner, preset):
        result = cli_runner.invoke(cli, ["homology", str(preset("sphere")), "--oracle"])
        assert result.exit_code == 0, result.output
        assert lines(result.output, r"^H_") == ["H_0 = Z", "H_1 = 0", "H_2 = Z"]
        assert "✓ Morse homology agrees with simplicial homology" in result.output

    def test_cyclic_field_needs_max_len(self, cli_runner, tmp_path):
        path = tmp_path / "cyclic.yaml"
        path.write_text(CYCLIC_FIELD, encoding="utf-8")
        result = cli_runner.invoke(cli, ["homology", str(path)])
        assert result.exit_code == 2
        assert "max_len" in result.output

    def test_d2_check_with_workers(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli, ["d2-check", str(preset("rp2")), "--random-fields", "2", "--workers", "2"]
        )
        assert result.exit_code == 0, result.output
        assert "✓ d^2 = 0 for the file field and 2 random gradient fields" in result.output


class TestLengthCapCommand:
    """A --max-len too small for the moduli space is a usage error."""

    def test_truncated_moduli_exits_2(self, cli_runner, preset):
        result = cli_runner.invoke(
            cli,
            ["moduli", str(preset("rp2")), "--alpha", "4-5-6", "--gamma", "1", "--max-len", "8"],
        )
        assert result.exit_code == 2
        assert "✗ Moduli space failed" in result.output
        assert "raise --max-len" in result.output
        assert "boundary flowlines" not in result.output

    def test_truncated_export_exits_2(self, cli_runner, preset, tmp_path):
        output = tmp_path / "moduli.dot"
        args = ["--alpha", "4-5-6", "--gamma", "1", "--max-len", "8", "-o", str(output)]
        result = cli_runner.invoke(cli, ["export-dot", str(preset("rp2")), *args])
        assert result.exit_code == 2
        assert not output.exists()


GOLDEN = Path(__file__).parent / "golden"
QUIET = {"MF_LOG_LEVEL": "ERROR"}


def report(result) -> str:
    """Command output without the ✓ status lines written to stderr."""
    kept = result.output.splitlines(keepends=True)
    return "".join(line for line in kept if not line.startswith("✓"))


class TestGoldenOutput:
    """Reports compared byte for byte with the files in tests/golden."""

    @pytest.mark.parametrize(
        ("preset_name", "args", "golden"),
        [
            ("rp2", ["critical"], "rp2_critical.txt"),
            ("rp2", ["homology"], "rp2_homology.txt"),
            ("rp2", ["differential", "-p", "2"], "rp2_differential_2.txt"),
            ("rp2", ["differential", "-p", "1"], "rp2_differential_1.txt"),
            ("rp2", ["flowlines", "--alpha", "1-3", "--gamma", "1"], "rp2_flowlines_1-3_1.txt"),
            ("sphere", ["homology"], "sphere_homology.txt"),
            ("sphere", ["moduli", "--alpha", "1-2-3", "--gamma", "4"], "sphere_moduli.txt"),
        ],
    )
    def test_preset_reports(self, cli_runner, preset, preset_name, args, golden):
        command, *options = args
        result = cli_runner.invoke(cli, [command, str(preset(preset_name)), *options], env=QUIET)
        assert result.exit_code == 0, result.output
        assert report(result) == (GOLDEN / golden).read_text(encoding="utf-8")

    @pytest.mark.parametrize(
        ("args", "golden"),
        [
            (["flowlines", "--alpha", "1-2-3", "--gamma", "1"], "triangle_flowlines.txt"),
            (["moduli", "--alpha", "1-2-3", "--gamma", "1"], "triangle_moduli.txt"),
            (["trace", "--from", "1-2-3,1-2,1"], "triangle_trace.txt"),
        ],
    )
    def test_triangle_reports(self, cli_runner, args, golden):
        command, *options = args
        result = cli_runner.invoke(
            cli, [command, str(GOLDEN / "triangle.yaml"), *options], env=QUIET
        )
        assert result.exit_code == 0, result.output
        assert report(result) == (GOLDEN / golden).read_text(encoding="utf-8")

    def test_triangle_dot(self, cli_runner, tmp_path):
        output = tmp_path / "moduli.dot"
        result = cli_runner.invoke(
            cli,
            [
                "export-dot",
                str(GOLDEN / "triangle.yaml"),
                "--alpha",
                "1-2-3",
                "--gamma",
                "1",
                "-o",
                str(output),
            ],
            env=QUIET,
        )
        assert result.exit_code == 0, result.output
        assert output.read_bytes() == (GOLDEN / "triangle_moduli.dot").read_bytes()

    def test_output_is_deterministic(self, cli_runner, preset):
        path = str(preset("rp2"))
        args = ["moduli", path, "--alpha", "4-5-6", "--gamma", "1"]
        first = cli_runner.invoke(cli, args, env=QUIET)
        second = cli_runner.invoke(cli, [*args, "--workers", "2"], env=QUIET)
        assert first.exit_code == 0, first.output
        assert report(first) == report(second)
