"""Moduli spaces of index 2 flowlines.

The moduli space M(alpha, gamma) is a graph whose vertices are the
flowlines alpha -> gamma and whose edges join flowlines one algorithm step
apart. Every vertex has degree at most 2 and the degree-1 vertices are
exactly the critical flowlines, so components are paths or cycles.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx

from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import Simplex
from morse_flowlines.errors import InvariantViolationError, TruncatedEnumerationError
from morse_flowlines.flow.engine import FlowlineEngine, Label
from morse_flowlines.flow.enumeration import enumerate_flowlines_index2
from morse_flowlines.flow.paths import Flowline
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


class ComponentKind(StrEnum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Component:
    """A connected component, flowlines listed in walking order."""

    kind: ComponentKind
    flowlines: tuple[Flowline, ...]
    endpoints: tuple[Flowline, ...]

    def __len__(self) -> int:
        return len(self.flowlines)


class ModuliSpace:
    """Graph of flowlines from ``alpha`` to ``gamma``."""

    def __init__(self, alpha: Simplex, gamma: Simplex, graph: nx.Graph) -> None:
        self.alpha = alpha
        self.gamma = gamma
        self._graph = nx.freeze(graph)
        too_big = [f for f, degree in self._graph.degree if degree > 2]
        if too_big:
            raise InvariantViolationError(
                f"moduli space vertex {too_big[0]} has degree {self._graph.degree[too_big[0]]}"
            )
        # boundary vertices and critical flowlines coincide
        for flowline, degree in self._graph.degree:
            if (degree <= 1) != flowline.critical:
                kind = "critical" if flowline.critical else "noncritical"
                raise InvariantViolationError(
                    f"moduli space vertex {flowline} is {kind} but has degree {degree}"
                )

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def vertices(self) -> list[Flowline]:
        return sorted(self._graph.nodes)

    @property
    def edges(self) -> list[tuple[Flowline, Flowline]]:
        return sorted(tuple(sorted(edge)) for edge in self._graph.edges)

    def degree(self, flowline: Flowline) -> int:
        return self._graph.degree[flowline]

    def components(self) -> list[Component]:
        """Connected components, smallest member flowline first."""
        found = []
        for nodes in nx.connected_components(self._graph):
            sub = self._graph.subgraph(nodes)
            ends = sorted(f for f in nodes if sub.degree[f] <= 1)
            if ends:
                kind = ComponentKind.PATH
                order = _walk(sub, ends[0])
            else:
                kind = ComponentKind.CYCLE
                order = _walk(sub, min(nodes))
            found.append(Component(kind, tuple(order), tuple(ends)))
        return sorted(found, key=lambda c: min(c.flowlines))

    def boundary(self) -> list[tuple[Flowline, int]]:
        """Flowlines of degree at most 1 with their signs."""
        return [(f, f.sign) for f in self.vertices if self.degree(f) <= 1]

    def equivalent(self, first: Flowline, second: Flowline) -> bool:
        """Whether two flowlines lie in the same component."""
        return nx.has_path(self._graph, first, second)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __repr__(self) -> str:
        return (
            f"ModuliSpace({self.alpha}, {self.gamma}, vertices={len(self)}, "
            f"edges={self._graph.number_of_edges()})"
        )


def _walk(graph: nx.Graph, start: Flowline) -> list[Flowline]:
    order = [start]
    previous: Flowline | None = None
    current = start
    while True:
        options = sorted(n for n in graph.neighbors(current) if n != previous and n != start)
        if not options:
            return order
        previous, current = current, options[0]
        order.append(current)


def build_moduli(
    alpha: Simplex,
    gamma: Simplex,
    diagram: ModifiedHasseDiagram,
    max_len: int | None = None,
    workers: int = 1,
) -> ModuliSpace:
    """Assemble M(alpha, gamma).

    A noncritical flowline is joined to its successors under both labels; a
    critical one only to its successor under label c.

    Args:
        alpha: Critical simplex of dimension n+1.
        gamma: Critical simplex of dimension n-1.
        diagram: Modified Hasse diagram of the complex and field.
        max_len: Optional path length cap, required on non-gradient fields.
        workers: Threads used to run algorithm steps.

    Raises:
        UnboundedEnumerationError: On a non-gradient field without ``max_len``.
        TruncatedEnumerationError: If an algorithm step leads to a flowline
            longer than ``max_len``.
        InvariantViolationError: If a vertex ends up with degree above 2, or
            the degree-1 vertices are not exactly the critical flowlines.
    """
    flowlines = enumerate_flowlines_index2(alpha, gamma, diagram, max_len)
    engine = FlowlineEngine(diagram)

    def neighbours(flowline: Flowline) -> list[Flowline]:
        labels = [Label.C] if flowline.critical else [Label.C, Label.F]
        return [engine.successor(flowline, label) for label in labels]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            adjacency = list(pool.map(neighbours, flowlines))
    else:
        adjacency = [neighbours(f) for f in flowlines]

    graph = nx.Graph()
    graph.add_nodes_from(flowlines)
    members = set(flowlines)
    for flowline, nexts in zip(flowlines, adjacency, strict=True):
        for nxt in nexts:
            if nxt not in members:
                logger.debug(
                    "successor outside enumerated flowlines",
                    source=flowline.name,
                    target=nxt.name,
                    max_len=max_len,
                )
                if max_len is None:
                    raise InvariantViolationError(
                        f"successor {nxt} of {flowline} is not a flowline {alpha} -> {gamma}"
                    )
                raise TruncatedEnumerationError(
                    f"successor {nxt} of {flowline} is longer than max_len={max_len}; "
                    "raise --max-len"
                )
            graph.add_edge(flowline, nxt)

    moduli = ModuliSpace(alpha, gamma, graph)
    logger.info(
        "moduli space built",
        alpha=alpha.name,
        gamma=gamma.name,
        vertices=len(moduli),
        edges=graph.number_of_edges(),
    )
    return moduli


def components(moduli: ModuliSpace) -> list[Component]:
    return moduli.components()


def boundary(moduli: ModuliSpace) -> list[tuple[Flowline, int]]:
    return moduli.boundary()
