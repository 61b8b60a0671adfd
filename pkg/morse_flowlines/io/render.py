"""Text reports rendered from the Jinja2 templates in ``morse_flowlines/templates``."""

from collections.abc import Iterable
from functools import cache
from typing import Any

from jinja2 import Environment, PackageLoader, StrictUndefined

from morse_flowlines.flow.engine import AlgOutcome
from morse_flowlines.flow.moduli import ModuliSpace
from morse_flowlines.flow.paths import Flowline, Path
from morse_flowlines.homology.chains import DifferentialMatrix
from morse_flowlines.homology.groups import HomologyResult


@cache
def _environment() -> Environment:
    return Environment(
        loader=PackageLoader("morse_flowlines", "templates"),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
        autoescape=False,
    )


def _render(template: str, **context: Any) -> str:
    return _environment().get_template(template).render(**context)


def render_trace(outcome: AlgOutcome) -> str:
    """One ``label TAB sign TAB simplices`` line per appended flowline."""
    return _render("trace.txt.j2", entries=outcome.entries)


def render_flowlines(paths: Iterable[Path | Flowline]) -> str:
    """One ``sign TAB kind TAB simplices`` line per path.

    ``kind`` is ``critical`` or ``noncritical`` for index 2 flowlines and
    ``index-1`` for plain paths.
    """
    items = []
    for p in paths:
        if isinstance(p, Flowline):
            kind = "critical" if p.critical else "noncritical"
        else:
            kind = f"index-{p.index}"
        items.append({"sign": p.sign, "kind": kind, "name": p.name})
    return _render("flowlines.txt.j2", items=items)


def render_matrix(matrix: DifferentialMatrix) -> str:
    return _render(
        "matrix.txt.j2",
        p=matrix.dimension,
        rows=[s.name for s in matrix.rows.simplices],
        cols=[s.name for s in matrix.cols.simplices],
        entries=matrix.tolist(),
    )


def render_homology(result: HomologyResult) -> str:
    return _render("homology.txt.j2", groups=list(result))


def render_moduli(moduli: ModuliSpace) -> str:
    components = [{"kind": c.kind, "size": len(c)} for c in moduli.components()]
    return _render(
        "moduli.txt.j2",
        alpha=moduli.alpha.name,
        gamma=moduli.gamma.name,
        vertices=len(moduli),
        edges=len(moduli.edges),
        components=components,
        boundary=moduli.boundary(),
    )


def render_dot(moduli: ModuliSpace) -> str:
    """Undirected DOT graph of a moduli space.

    Nodes are labelled by their simplex sequences and boundary flowlines are
    double circles. Nodes and edges come out sorted.
    """
    boundary = {f for f, _ in moduli.boundary()}
    nodes = [{"name": f.name, "boundary": f in boundary} for f in moduli.vertices]
    edges = [(a.name, b.name) for a, b in moduli.edges]
    return _render(
        "moduli.dot.j2",
        alpha=moduli.alpha.name,
        gamma=moduli.gamma.name,
        nodes=nodes,
        edges=edges,
    )
