"""Monotone decreasing graph properties on spanning subgraphs of K_n.

A property is a predicate on edge sets. Every built-in property is
preserved by deleting edges, so the edge sets satisfying it form a
simplicial complex.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations, permutations

import networkx as nx

Edge = tuple[int, int]
Predicate = Callable[[nx.Graph], bool]


@dataclass(frozen=True)
class GraphProperty:
    """A named graph predicate with its parameters."""

    name: str
    params: tuple[int, ...]
    predicate: Predicate = field(compare=False, repr=False)

    @property
    def tag(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(str(p) for p in self.params)})"

    def holds(self, n: int, edges: Iterable[Edge]) -> bool:
        return self.predicate(spanning_graph(n, edges))


def spanning_graph(n: int, edges: Iterable[Edge]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return graph


def complete_graph_edges(n: int) -> list[Edge]:
    """Edges of K_n in lexicographic order; an edge's index is its vertex id."""
    return list(combinations(range(n), 2))


def _edge_colourable(graph: nx.Graph, k: int) -> bool:
    # backtracking colouring of the line graph
    line = nx.line_graph(graph)
    nodes = sorted(line.nodes, key=lambda e: -line.degree(e))
    colour: dict[Edge, int] = {}

    def assign(i: int) -> bool:
        if i == len(nodes):
            return True
        used = {colour[m] for m in line.neighbors(nodes[i]) if m in colour}
        for c in range(k):
            if c not in used:
                colour[nodes[i]] = c
                if assign(i + 1):
                    return True
                del colour[nodes[i]]
        return False

    return assign(0)


def _has_hamiltonian_cycle(graph: nx.Graph) -> bool:
    n = graph.number_of_nodes()
    if n < 3:
        return False
    for order in permutations(range(1, n)):
        if order[0] > order[-1]:
            continue
        cycle = (0, *order, 0)
        if all(graph.has_edge(a, b) for a, b in zip(cycle, cycle[1:], strict=False)):
            return True
    return False


def edge_colourable(k: int) -> GraphProperty:
    """Edges can be properly coloured with k colours."""
    return GraphProperty("edge-colourable", (k,), lambda g: _edge_colourable(g, k))


def max_edges(k: int) -> GraphProperty:
    return GraphProperty("max-edges", (k,), lambda g: g.number_of_edges() <= k)


def max_degree(d: int) -> GraphProperty:
    return GraphProperty(
        "max-degree", (d,), lambda g: max((deg for _, deg in g.degree), default=0) <= d
    )


def disconnected() -> GraphProperty:
    return GraphProperty("disconnected", (), lambda g: not nx.is_connected(g))


def bipartite() -> GraphProperty:
    return GraphProperty("bipartite", (), nx.is_bipartite)


def not_k_connected(i: int) -> GraphProperty:
    """Vertex connectivity below i."""
    return GraphProperty("not-connected", (i,), lambda g: nx.node_connectivity(g) < i)


def no_hamiltonian_cycle() -> GraphProperty:
    return GraphProperty("no-hamiltonian-cycle", (), lambda g: not _has_hamiltonian_cycle(g))


BUILTIN_PROPERTIES: dict[str, Callable[..., GraphProperty]] = {
    "edge-colourable": edge_colourable,
    "max-edges": max_edges,
    "max-degree": max_degree,
    "disconnected": disconnected,
    "bipartite": bipartite,
    "not-connected": not_k_connected,
    "no-hamiltonian-cycle": no_hamiltonian_cycle,
}

PARAMETRIZED = {"edge-colourable", "max-edges", "max-degree", "not-connected"}


def property_by_name(name: str, param: int | None = None) -> GraphProperty:
    """Look up a built-in property by its CLI name.

    Raises:
        KeyError: If the name is unknown.
        ValueError: If a parametrized property gets no parameter.
    """
    factory = BUILTIN_PROPERTIES[name]
    if name in PARAMETRIZED:
        if param is None:
            raise ValueError(f"property {name} needs a parameter")
        return factory(param)
    return factory()
