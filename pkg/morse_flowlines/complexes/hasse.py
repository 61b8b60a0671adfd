"""The signed modified Hasse diagram of a complex with a vector field."""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import networkx as nx

from morse_flowlines.complexes.field import (
    DiscreteVectorField,
    GradientReport,
    is_gradient,
    validate_field,
)
from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex, arrow_sign
from morse_flowlines.errors import InvalidVectorFieldError, MalformedPathError
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


class ArrowKind(StrEnum):
    DOWN = "boundary-down"
    UP = "morse-up"


@dataclass(frozen=True)
class Arrow:
    source: Simplex
    target: Simplex
    kind: ArrowKind
    sign: int


class ModifiedHasseDiagram:
    """Hasse diagram of ``complex_`` with every pair of ``field_`` reversed.

    Every facet relation gives exactly one arrow: boundary-down from the
    larger simplex, or morse-up from the smaller one when the two are paired.
    """

    def __init__(self, complex_: SimplicialComplex, field_: DiscreteVectorField) -> None:
        report = validate_field(field_, complex_)
        if not report.ok:
            raise InvalidVectorFieldError(f"invalid vector field: {report.violations[0]}")
        self.complex = complex_
        self.field = field_

        graph = nx.DiGraph()
        graph.add_nodes_from(complex_)
        for sigma, tau in complex_.facet_relations():
            sign = arrow_sign(sigma, tau)
            if field_.head_of(tau) == sigma:
                graph.add_edge(tau, sigma, kind=ArrowKind.UP, sign=sign)
            else:
                graph.add_edge(sigma, tau, kind=ArrowKind.DOWN, sign=sign)
        self._graph = nx.freeze(graph)
        logger.debug(
            "modified hasse diagram built",
            arrows=graph.number_of_edges(),
            morse_up=len(field_),
        )

    @property
    def graph(self) -> nx.DiGraph:
        """Read-only networkx view; edges carry ``kind`` and ``sign``."""
        return self._graph

    def arrows(self) -> list[Arrow]:
        return sorted(
            (
                Arrow(u, v, data["kind"], data["sign"])
                for u, v, data in self._graph.edges(data=True)
            ),
            key=lambda a: (a.source, a.target),
        )

    def arrow(self, source: Simplex, target: Simplex) -> Arrow:
        data = self._graph.get_edge_data(source, target)
        if data is None:
            raise MalformedPathError(f"no arrow {source} -> {target} in the modified Hasse diagram")
        return Arrow(source, target, data["kind"], data["sign"])

    def successors(self, sigma: Simplex) -> list[Simplex]:
        """Targets of arrows leaving ``sigma``, sorted."""
        return sorted(self._graph.successors(sigma))

    def count(self, kind: ArrowKind) -> int:
        return sum(1 for _, _, k in self._graph.edges(data="kind") if k == kind)

    def is_forward(self, source: Simplex, target: Simplex) -> bool:
        """Whether moving ``source`` -> ``target`` follows an arrow.

        Raises:
            MalformedPathError: If the two simplices are not joined by an arrow.
        """
        if self._graph.has_edge(source, target):
            return True
        if self._graph.has_edge(target, source):
            return False
        raise MalformedPathError(f"{source} and {target} are not adjacent in the Hasse diagram")

    def traversal_flags(self, simplices: Iterable[Simplex]) -> tuple[bool, ...]:
        items = list(simplices)
        for sigma in items:
            self.complex.require(sigma)
        return tuple(self.is_forward(a, b) for a, b in zip(items, items[1:], strict=False))

    def is_critical(self, sigma: Simplex) -> bool:
        return self.field.is_critical(sigma)

    @cached_property
    def gradient(self) -> GradientReport:
        return is_gradient(self.field, self.complex)


def build_modified_hasse(
    complex_: SimplicialComplex, field_: DiscreteVectorField
) -> ModifiedHasseDiagram:
    """Build the signed modified Hasse diagram.

    Raises:
        InvalidVectorFieldError: If ``field_`` is not a valid field on ``complex_``.
    """
    return ModifiedHasseDiagram(complex_, field_)
