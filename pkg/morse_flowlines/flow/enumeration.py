"""Exhaustive enumeration of flowlines between critical simplices.

Flowlines are legal paths: every step follows an arrow of the modified
Hasse diagram and the dimension never rises twice in a row. A flowline
ending at a critical simplex never dips below its end dimension, so the
search prunes there. On a gradient field the search is finite; otherwise
a length cap is required.
"""

from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import Simplex
from morse_flowlines.errors import MalformedPathError, UnboundedEnumerationError
from morse_flowlines.flow.paths import Flowline, Path
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


def _check_endpoints(
    diagram: ModifiedHasseDiagram, start: Simplex, end: Simplex, index: int
) -> None:
    for sigma in (start, end):
        diagram.complex.require(sigma)
        if not diagram.is_critical(sigma):
            raise MalformedPathError(f"flowline endpoint {sigma} is not critical")
    if start.dim - end.dim != index:
        raise MalformedPathError(
            f"{start} -> {end} has index {start.dim - end.dim}, expected {index}"
        )


def _legal_paths(
    diagram: ModifiedHasseDiagram, start: Simplex, end: Simplex, max_len: int | None
) -> list[Path]:
    if max_len is None and not diagram.gradient:
        raise UnboundedEnumerationError(
            "the vector field has a closed V-path; pass a max_len to enumerate flowlines"
        )

    found: list[Path] = []
    floor = end.dim

    def walk(trail: list[Simplex], rose: bool) -> None:
        current = trail[-1]
        if current == end:
            found.append(Path(tuple(trail), (True,) * (len(trail) - 1)))
            return
        if max_len is not None and len(trail) - 1 >= max_len:
            return
        for nxt in diagram.successors(current):
            rises = nxt.dim > current.dim
            if (rises and rose) or nxt.dim < floor:
                continue
            trail.append(nxt)
            walk(trail, rises)
            trail.pop()

    walk([start], False)
    return sorted(found)


def enumerate_flowlines_index1(
    alpha: Simplex, beta: Simplex, diagram: ModifiedHasseDiagram, max_len: int | None = None
) -> list[Path]:
    """All legal paths from critical ``alpha`` to critical ``beta`` one dimension lower.

    Raises:
        MalformedPathError: If an endpoint is not critical or the dimensions are wrong.
        UnboundedEnumerationError: On a non-gradient field without ``max_len``.
    """
    _check_endpoints(diagram, alpha, beta, 1)
    return _legal_paths(diagram, alpha, beta, max_len)


def enumerate_flowlines_index2(
    alpha: Simplex, gamma: Simplex, diagram: ModifiedHasseDiagram, max_len: int | None = None
) -> list[Flowline]:
    """All index 2 flowlines from critical ``alpha`` to critical ``gamma``.

    Raises:
        MalformedPathError: If an endpoint is not critical or the dimensions are wrong.
        UnboundedEnumerationError: On a non-gradient field without ``max_len``.
    """
    _check_endpoints(diagram, alpha, gamma, 2)
    flowlines = [
        Flowline.from_path(p, diagram.field)
        for p in _legal_paths(diagram, alpha, gamma, max_len)
    ]
    logger.debug(
        "flowlines enumerated",
        alpha=alpha.name,
        gamma=gamma.name,
        count=len(flowlines),
        critical=sum(f.critical for f in flowlines),
    )
    return flowlines
