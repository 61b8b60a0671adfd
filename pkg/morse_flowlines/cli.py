"""Command-line interface for morse-flowlines.

Provides commands for validating complex files, enumerating flowlines,
tracing the flowline algorithm, building moduli spaces, computing Morse
differentials and homology, and writing the preset example complexes.
"""

import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

import click
import numpy as np

from morse_flowlines import __version__
from morse_flowlines.complexes.field import (
    DiscreteVectorField,
    critical_simplices,
    is_gradient,
    random_gradient_field,
    validate_field,
)
from morse_flowlines.complexes.generators import (
    gen_full_simplex,
    gen_graph_property_complex,
    gen_rp2_preset,
    gen_sphere_preset,
    gen_two_triangle_preset,
)
from morse_flowlines.complexes.graph_properties import (
    BUILTIN_PROPERTIES,
    PARAMETRIZED,
    property_by_name,
)
from morse_flowlines.complexes.hasse import ModifiedHasseDiagram, build_modified_hasse
from morse_flowlines.complexes.simplex import Simplex
from morse_flowlines.config import get_config
from morse_flowlines.errors import (
    CannotInsertError,
    ComplexFileError,
    MalformedPathError,
    MalformedSimplexError,
    MorseFlowError,
    NotInComplexError,
    UnboundedEnumerationError,
)
from morse_flowlines.flow.engine import Cycled, FlowlineEngine, Label
from morse_flowlines.flow.enumeration import (
    enumerate_flowlines_index1,
    enumerate_flowlines_index2,
)
from morse_flowlines.flow.moduli import build_moduli
from morse_flowlines.flow.paths import Flowline
from morse_flowlines.flow.paths import Path as FlowPath
from morse_flowlines.homology.chains import (
    morse_differential,
    morse_differentials,
    simplicial_boundary,
    verify_d_squared,
)
from morse_flowlines.homology.groups import homology, simplicial_homology_oracle
from morse_flowlines.io.complex_file import document_from, print_complex_file, read_complex
from morse_flowlines.io.render import (
    render_dot,
    render_flowlines,
    render_homology,
    render_matrix,
    render_moduli,
    render_trace,
)
from morse_flowlines.logging import configure_logging, get_logger

logger = get_logger(__name__)

# Errors caused by the invocation rather than by the mathematics.
USAGE_ERRORS = (
    ComplexFileError,
    MalformedSimplexError,
    NotInComplexError,
    MalformedPathError,
    UnboundedEnumerationError,
    CannotInsertError,
)


class SimplexParam(click.ParamType):
    """A simplex named by its hyphen-joined vertices, e.g. ``1-2-3``."""

    name = "simplex"

    def convert(
        self, value: object, param: click.Parameter | None, ctx: click.Context | None
    ) -> Simplex:
        if isinstance(value, Simplex):
            return value
        try:
            return Simplex.parse(str(value))
        except MalformedSimplexError as e:
            self.fail(str(e), param, ctx)


SIMPLEX = SimplexParam()

complex_argument = click.argument(
    "complex_file", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
max_len_option = click.option(
    "--max-len",
    type=click.IntRange(min=1),
    default=None,
    help="Path length cap for enumeration (required on non-gradient fields)",
)
workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Worker threads (default: MF_WORKERS or 1)",
)


def _abort(action: str, error: Exception) -> NoReturn:
    code = 2 if isinstance(error, USAGE_ERRORS) else 1
    click.secho(f"✗ {action}: {error}", fg="red", err=True)
    logger.error("command failed", action=action, error=str(error), exit_code=code)
    sys.exit(code)


def _load(path: Path) -> ModifiedHasseDiagram:
    """Read a complex file; a missing field means the empty (canonical) field."""
    complex_, field_, _ = read_complex(path.read_text(encoding="utf-8"))
    return build_modified_hasse(complex_, field_ or DiscreteVectorField())


def _write(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        click.secho(f"✓ Wrote {output}", fg="green", err=True)


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.version_option(version=__version__, prog_name="morse-flowlines")
def cli(debug: bool) -> None:
    """Morse Flowlines - discrete Morse theory on simplicial complexes."""
    config = get_config()
    configure_logging(
        debug=debug or config.debug,
        log_format=config.logging.log_format,
        log_level=config.logging.log_level,
    )
    if debug:
        logger.info("debug mode enabled")


@cli.command()
@complex_argument
def validate(complex_file: Path) -> None:
    """Validate a complex file and its vector field.

    Checks face closure, the Morse values (when present), that the field is
    a matching of facet pairs and that it has no closed V-path.
    """
    try:
        complex_, field_, morse = read_complex(complex_file.read_text(encoding="utf-8"))
        field_ = field_ or DiscreteVectorField()
        report = validate_field(field_, complex_)
        if not report.ok:
            for violation in report.violations:
                click.echo(f"  {violation}", err=True)
            click.secho(
                f"✗ Invalid vector field: {len(report.violations)} violations", fg="red", err=True
            )
            sys.exit(1)
        gradient = is_gradient(field_, complex_)
        if not gradient.ok:
            assert gradient.witness is not None
            cycle = ",".join(s.name for s in gradient.witness)
            click.secho(f"✗ Vector field has a closed V-path: {cycle}", fg="red", err=True)
            sys.exit(1)
    except MorseFlowError as e:
        _abort("Validation failed", e)

    critical = sum(1 for s in complex_ if field_.is_critical(s))
    f_vector = ", ".join(str(n) for n in complex_.f_vector)
    click.secho(
        f"✓ Valid complex: f-vector ({f_vector}), Euler characteristic "
        f"{complex_.euler_characteristic}",
        fg="green",
    )
    if morse is not None:
        click.secho("✓ Morse values form a discrete Morse function", fg="green")
    click.secho(
        f"✓ Gradient vector field: {len(field_)} pairs, {critical} critical simplices",
        fg="green",
    )
    logger.info("complex validated", path=str(complex_file), critical=critical)


@cli.command()
@complex_argument
def critical(complex_file: Path) -> None:
    """List the critical simplices, one ``dimension TAB simplex`` line each."""
    try:
        diagram = _load(complex_file)
    except MorseFlowError as e:
        _abort("Cannot load complex", e)

    for p in range(diagram.complex.top_dimension + 1):
        for sigma in critical_simplices(diagram.complex, diagram.field, p):
            click.echo(f"{p}\t{sigma}")


@cli.command()
@complex_argument
@click.option("--alpha", type=SIMPLEX, required=True, help="Start simplex, e.g. 1-2-3")
@click.option("--gamma", type=SIMPLEX, required=True, help="End simplex")
@max_len_option
def flowlines(complex_file: Path, alpha: Simplex, gamma: Simplex, max_len: int | None) -> None:
    """Enumerate the flowlines between two critical simplices.

    Index 1 and index 2 are supported; each line is ``sign TAB kind TAB
    simplices``.
    """
    config = get_config()
    max_len = max_len if max_len is not None else config.engine.max_len
    try:
        diagram = _load(complex_file)
        found: Sequence[FlowPath | Flowline]
        if alpha.dim - gamma.dim == 1:
            found = enumerate_flowlines_index1(alpha, gamma, diagram, max_len)
        else:
            found = enumerate_flowlines_index2(alpha, gamma, diagram, max_len)
    except MorseFlowError as e:
        _abort("Enumeration failed", e)

    click.echo(render_flowlines(found), nl=False)


@cli.command()
@complex_argument
@click.option("--alpha", type=SIMPLEX, required=True, help="Critical simplex of dimension n+1")
@click.option("--gamma", type=SIMPLEX, required=True, help="Critical simplex of dimension n-1")
@max_len_option
@workers_option
def moduli(
    complex_file: Path,
    alpha: Simplex,
    gamma: Simplex,
    max_len: int | None,
    workers: int | None,
) -> None:
    """Build the moduli space M(alpha, gamma) and summarize its components."""
    config = get_config()
    try:
        diagram = _load(complex_file)
        space = build_moduli(
            alpha,
            gamma,
            diagram,
            max_len if max_len is not None else config.engine.max_len,
            workers or config.engine.workers,
        )
    except MorseFlowError as e:
        _abort("Moduli space failed", e)

    click.echo(render_moduli(space), nl=False)


@cli.command()
@complex_argument
@click.option(
    "--from",
    "start_path",
    required=True,
    help="Index 2 flowline as comma-separated simplices, e.g. 1-2-3,1-2,1-2-4,1-4,4",
)
@click.option(
    "--start",
    type=click.Choice([label.value for label in Label]),
    default=Label.C.value,
    show_default=True,
    help="Label of the starting flowline (c begins with Flop, f with Insert)",
)
def trace(complex_file: Path, start_path: str, start: str) -> None:
    """Run the flowline algorithm and print the labelled flowline list.

    Each line is ``label TAB sign TAB simplices``.
    """
    config = get_config()
    try:
        diagram = _load(complex_file)
        flowline = Flowline.parse(diagram, start_path)
        engine = FlowlineEngine(diagram, max_steps=config.engine.max_alg_steps)
        outcome = engine.alg_list(flowline, Label(start))
    except MorseFlowError as e:
        _abort("Trace failed", e)

    click.echo(render_trace(outcome), nl=False)
    counts = f"{outcome.flops} flops, {outcome.inserts} inserts, {outcome.cancels} cancels"
    if isinstance(outcome, Cycled):
        click.secho(
            f"✓ Cycled back to the start after {outcome.period} steps ({counts})",
            fg="green",
            err=True,
        )
    else:
        click.secho(
            f"✓ Terminated after {outcome.floperations} floperations ({counts})",
            fg="green",
            err=True,
        )


@cli.command()
@complex_argument
@click.option("-p", "dimension", type=click.IntRange(min=0), required=True, help="Chain dimension")
@click.option(
    "--simplicial",
    is_flag=True,
    help="Print the simplicial boundary instead of the Morse differential",
)
@max_len_option
@workers_option
def differential(
    complex_file: Path,
    dimension: int,
    simplicial: bool,
    max_len: int | None,
    workers: int | None,
) -> None:
    """Print the Morse differential from dimension p to p-1."""
    config = get_config()
    try:
        diagram = _load(complex_file)
        if simplicial:
            matrix = simplicial_boundary(diagram.complex, dimension)
        else:
            matrix = morse_differential(
                diagram,
                dimension,
                max_len if max_len is not None else config.engine.max_len,
                workers or config.engine.workers,
            )
    except MorseFlowError as e:
        _abort("Differential failed", e)

    click.echo(render_matrix(matrix), nl=False)


@cli.command(name="d2-check")
@complex_argument
@click.option(
    "--random-fields",
    type=click.IntRange(min=0),
    default=None,
    help="Also check this many random gradient fields (default: MF_RANDOM_FIELDS)",
)
@click.option("--seed", type=int, default=None, help="Random seed (default: MF_SEED)")
@max_len_option
@workers_option
def d2_check(
    complex_file: Path,
    random_fields: int | None,
    seed: int | None,
    max_len: int | None,
    workers: int | None,
) -> None:
    """Check that consecutive Morse differentials compose to zero.

    The field of the file is checked first, then random gradient fields on
    the same complex. Exits with status 1 and the first nonzero entry on
    failure.
    """
    config = get_config()
    count = random_fields if random_fields is not None else config.random.random_fields
    rng = np.random.default_rng(seed if seed is not None else config.random.seed)
    max_len = max_len if max_len is not None else config.engine.max_len
    try:
        diagram = _load(complex_file)
        diagrams = [diagram] + [
            build_modified_hasse(diagram.complex, random_gradient_field(diagram.complex, rng))
            for _ in range(count)
        ]
        for index, current in enumerate(diagrams):
            differentials = morse_differentials(current, max_len, workers or config.engine.workers)
            for low, high in zip(differentials, differentials[1:], strict=False):
                check = verify_d_squared(high, low)
                if check.witness is not None:
                    alpha, gamma, value = check.witness
                    source = "file field" if index == 0 else f"random field {index}"
                    click.secho(
                        f"✗ d^2 != 0 on the {source}: <d d {alpha}, {gamma}> = {value}",
                        fg="red",
                        err=True,
                    )
                    sys.exit(1)
    except MorseFlowError as e:
        _abort("d^2 check failed", e)

    click.secho(f"✓ d^2 = 0 for the file field and {count} random gradient fields", fg="green")


@cli.command(name="homology")
@complex_argument
@click.option("--oracle", is_flag=True, help="Compare with simplicial homology")
@max_len_option
@workers_option
def homology_command(
    complex_file: Path, oracle: bool, max_len: int | None, workers: int | None
) -> None:
    """Compute integer homology from the Morse differential."""
    config = get_config()
    try:
        diagram = _load(complex_file)
        result = homology(
            morse_differentials(
                diagram,
                max_len if max_len is not None else config.engine.max_len,
                workers or config.engine.workers,
            )
        )
        expected = simplicial_homology_oracle(diagram.complex) if oracle else None
    except MorseFlowError as e:
        _abort("Homology failed", e)

    click.echo(render_homology(result), nl=False)
    if expected is None:
        return
    if expected != result:
        click.secho("✗ Morse homology differs from simplicial homology:", fg="red", err=True)
        click.echo(render_homology(expected), nl=False, err=True)
        sys.exit(1)
    click.secho("✓ Morse homology agrees with simplicial homology", fg="green")


@cli.command(name="export-dot")
@complex_argument
@click.option("--alpha", type=SIMPLEX, required=True, help="Critical simplex of dimension n+1")
@click.option("--gamma", type=SIMPLEX, required=True, help="Critical simplex of dimension n-1")
@max_len_option
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Output file (default: stdout)",
)
def export_dot(
    complex_file: Path,
    alpha: Simplex,
    gamma: Simplex,
    max_len: int | None,
    output: Path | None,
) -> None:
    """Write the moduli space M(alpha, gamma) as a Graphviz DOT graph."""
    config = get_config()
    try:
        diagram = _load(complex_file)
        space = build_moduli(
            alpha, gamma, diagram, max_len if max_len is not None else config.engine.max_len
        )
    except MorseFlowError as e:
        _abort("DOT export failed", e)

    _write(render_dot(space), output)


@cli.command()
@click.argument(
    "preset", type=click.Choice(["sphere", "rp2", "two-triangles", "simplex", "graph"])
)
@click.option(
    "--dim", type=click.IntRange(min=0), default=2, show_default=True, help="Simplex dimension"
)
@click.option(
    "--n",
    "graph_n",
    type=click.IntRange(min=2),
    default=4,
    show_default=True,
    help="Graph vertices",
)
@click.option(
    "--property",
    "property_name",
    type=click.Choice(sorted(BUILTIN_PROPERTIES)),
    default="max-edges",
    show_default=True,
    help="Monotone decreasing graph property",
)
@click.option("--param", type=int, default=None, help="Property parameter (k, d or i)")
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Output file (default: stdout)",
)
def gen(
    preset: str,
    dim: int,
    graph_n: int,
    property_name: str,
    param: int | None,
    output: Path | None,
) -> None:
    """Write a preset complex file.

    Presets: the tetrahedron boundary (sphere), the six-vertex projective
    plane (rp2), two triangles with a Morse function, the full simplex of
    dimension --dim, and the complex of graphs on --n vertices with a
    monotone decreasing property.
    """
    if property_name in PARAMETRIZED and preset == "graph" and param is None:
        raise click.UsageError(f"--property {property_name} needs --param")

    try:
        if preset == "sphere":
            document = document_from(*gen_sphere_preset())
        elif preset == "rp2":
            document = document_from(*gen_rp2_preset())
        elif preset == "two-triangles":
            document = document_from(*gen_two_triangle_preset())
        elif preset == "simplex":
            document = document_from(gen_full_simplex(dim))
        else:
            prop = property_by_name(property_name, param)
            document = document_from(gen_graph_property_complex(graph_n, prop))
    except MorseFlowError as e:
        _abort("Generation failed", e)

    logger.info("preset generated", preset=preset)
    _write(print_complex_file(document), output)


def main() -> None:
    """Entry point for the CLI."""
    cli()
