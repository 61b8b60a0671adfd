"""Discrete Morse functions and discrete vector fields.

A discrete vector field is a matching of facet pairs (tail, head). This
module classifies simplices against a field, validates fields and Morse
functions, detects closed V-paths and draws random gradient fields.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property

import networkx as nx
import numpy as np

from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex
from morse_flowlines.errors import InvalidMorseFunctionError, UnboundedEnumerationError
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)

Pair = tuple[Simplex, Simplex]


class CriticalityClass(StrEnum):
    """Role of a simplex with respect to a vector field."""

    CRITICAL = "critical"
    HEAD = "head"
    TAIL = "tail"


@dataclass(frozen=True)
class MorseFunction:
    """Real values on the simplices of a complex."""

    values: Mapping[Simplex, float]

    def __call__(self, sigma: Simplex) -> float:
        return self.values[sigma]

    def __hash__(self) -> int:
        return hash(frozenset(self.values.items()))


@dataclass(frozen=True)
class MorseViolation:
    """A simplex with more than one exceptional neighbour on one side."""

    simplex: Simplex
    side: str
    neighbours: tuple[Simplex, ...]

    def __str__(self) -> str:
        names = ", ".join(str(s) for s in self.neighbours)
        return (
            f"{self.simplex} has {len(self.neighbours)} exceptional {self.side} "
            f"neighbours ({names})"
        )


@dataclass(frozen=True)
class DiscreteVectorField:
    """A set of (tail, head) pairs with tail a facet of head.

    Construction does not validate; see ``validate_field``.
    """

    pairs: frozenset[Pair] = field(default_factory=frozenset)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Pair]) -> "DiscreteVectorField":
        return cls(frozenset(pairs))

    @cached_property
    def _head_of(self) -> dict[Simplex, Simplex]:
        return {tail: head for tail, head in self.pairs}

    @cached_property
    def _tail_of(self) -> dict[Simplex, Simplex]:
        return {head: tail for tail, head in self.pairs}

    def head_of(self, tail: Simplex) -> Simplex | None:
        """The simplex ``tail`` is paired up with, if any."""
        return self._head_of.get(tail)

    def tail_of(self, head: Simplex) -> Simplex | None:
        """The simplex ``head`` is paired down with, if any."""
        return self._tail_of.get(head)

    def partner(self, sigma: Simplex) -> Simplex | None:
        return self._head_of.get(sigma) or self._tail_of.get(sigma)

    def is_critical(self, sigma: Simplex) -> bool:
        return sigma not in self._head_of and sigma not in self._tail_of

    def is_complete(self, complex_: SimplicialComplex) -> bool:
        """True when no simplex of ``complex_`` is critical."""
        return all(not self.is_critical(s) for s in complex_)

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.sorted_pairs())


@dataclass(frozen=True)
class FieldViolation:
    simplex: Simplex
    reason: str

    def __str__(self) -> str:
        return f"{self.simplex}: {self.reason}"


@dataclass(frozen=True)
class FieldReport:
    """Outcome of ``validate_field``."""

    violations: tuple[FieldViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GradientReport:
    """Outcome of ``is_gradient``; ``witness`` is a closed V-path when not gradient."""

    witness: tuple[Simplex, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.ok


def canonical_morse_function(complex_: SimplicialComplex) -> MorseFunction:
    """f(sigma) = dim(sigma); its field is empty."""
    return MorseFunction({s: float(s.dim) for s in complex_})


def validate_morse_function(f: MorseFunction, complex_: SimplicialComplex) -> list[MorseViolation]:
    """List every simplex breaking the at-most-one-exceptional-neighbour rule.

    A facet gamma of beta is exceptional when f(gamma) >= f(beta); a cofacet
    alpha of beta is exceptional when f(alpha) <= f(beta). Ties count.

    Raises:
        InvalidMorseFunctionError: If ``f`` is not defined on every simplex.
    """
    missing = [s for s in complex_ if s not in f.values]
    if missing:
        raise InvalidMorseFunctionError(
            f"Morse function is undefined on {len(missing)} simplices, first {missing[0]}",
            witness=missing[0],
        )

    violations = []
    for beta in complex_:
        lower = tuple(g for g in beta.facets() if f(g) >= f(beta))
        upper = tuple(a for a in complex_.cofacets(beta) if f(a) <= f(beta))
        if len(lower) > 1:
            violations.append(MorseViolation(beta, "lower", lower))
        if len(upper) > 1:
            violations.append(MorseViolation(beta, "upper", upper))
    return violations


def field_from_morse(f: MorseFunction, complex_: SimplicialComplex) -> DiscreteVectorField:
    """The gradient field of ``f``: all facet pairs (gamma, alpha) with f(gamma) >= f(alpha).

    Raises:
        InvalidMorseFunctionError: If ``f`` is not a discrete Morse function on
            ``complex_``; the first offending simplex is the witness.
    """
    violations = validate_morse_function(f, complex_)
    if violations:
        first = violations[0]
        logger.error("invalid morse function", simplex=str(first.simplex), side=first.side)
        raise InvalidMorseFunctionError(f"not a discrete Morse function: {first}", witness=first)

    pairs = [(tau, sigma) for sigma, tau in complex_.facet_relations() if f(tau) >= f(sigma)]
    field_ = DiscreteVectorField.from_pairs(pairs)
    report = validate_field(field_, complex_)
    if not report.ok:
        raise InvalidMorseFunctionError(
            f"Morse function induces an invalid field: {report.violations[0]}",
            witness=report.violations[0].simplex,
        )
    return field_


def validate_field(field_: DiscreteVectorField, complex_: SimplicialComplex) -> FieldReport:
    """Check that every pair is a facet relation in ``complex_`` and no simplex repeats."""
    violations: list[FieldViolation] = []
    seen: dict[Simplex, Pair] = {}
    for tail, head in field_.sorted_pairs():
        for sigma in (tail, head):
            if sigma not in complex_:
                violations.append(FieldViolation(sigma, "not in the complex"))
        if not tail.is_facet_of(head):
            violations.append(FieldViolation(tail, f"not a facet of its partner {head}"))
        for sigma in (tail, head):
            if sigma in seen:
                other = seen[sigma]
                violations.append(
                    FieldViolation(
                        sigma, f"in two pairs ({other[0]}, {other[1]}) and ({tail}, {head})"
                    )
                )
            else:
                seen[sigma] = (tail, head)
    if violations:
        logger.info("vector field rejected", violations=len(violations))
    return FieldReport(tuple(violations))


def classify(sigma: Simplex, field_: DiscreteVectorField) -> CriticalityClass:
    if field_.head_of(sigma) is not None:
        return CriticalityClass.TAIL
    if field_.tail_of(sigma) is not None:
        return CriticalityClass.HEAD
    return CriticalityClass.CRITICAL


def critical_simplices(
    complex_: SimplicialComplex, field_: DiscreteVectorField, p: int
) -> list[Simplex]:
    """Critical p-simplices in lexicographic order."""
    return [s for s in complex_.simplices(p) if field_.is_critical(s)]


def v_path_graph(field_: DiscreteVectorField, p: int) -> nx.DiGraph:
    """Directed graph on p-simplices with an edge a -> a' whenever a is paired
    with b and a' != a is another facet of b."""
    graph = nx.DiGraph()
    for tail, head in field_.sorted_pairs():
        if tail.dim != p:
            continue
        graph.add_node(tail)
        for other in head.facets():
            if other != tail:
                graph.add_edge(tail, other)
    return graph


def is_gradient(field_: DiscreteVectorField, complex_: SimplicialComplex) -> GradientReport:
    """Check that ``field_`` has no nontrivial closed V-path.

    Returns:
        A report that is truthy for gradient fields. Otherwise its witness is
        a closed V-path a0, b0, a1, b1, ..., a0.
    """
    for p in range(complex_.top_dimension):
        graph = v_path_graph(field_, p)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            continue
        witness: list[Simplex] = []
        for source, _ in cycle:
            head = field_.head_of(source)
            assert head is not None
            witness.extend((source, head))
        witness.append(cycle[0][0])
        logger.info("closed V-path found", dimension=p, length=len(cycle))
        return GradientReport(tuple(witness))
    return GradientReport()


def v_paths(
    field_: DiscreteVectorField, complex_: SimplicialComplex, start: Simplex
) -> list[tuple[Simplex, ...]]:
    """Maximal V-paths a0 < b0 > a1 < b1 > ... beginning at ``start``.

    A V-path ends at the first p-simplex that is not a tail at this level.
    A non-tail ``start`` gives the trivial path (start,).

    Raises:
        UnboundedEnumerationError: If the field has closed V-paths.
    """
    complex_.require(start)
    if not is_gradient(field_, complex_):
        raise UnboundedEnumerationError("V-paths are unbounded on a field with closed V-paths")

    found: list[tuple[Simplex, ...]] = []

    def extend(prefix: tuple[Simplex, ...]) -> None:
        current = prefix[-1]
        head = field_.head_of(current)
        if head is None:
            found.append(prefix)
            return
        for nxt in head.facets():
            if nxt != current:
                extend(prefix + (head, nxt))

    extend((start,))
    return sorted(found)


def random_gradient_field(
    complex_: SimplicialComplex, rng: np.random.Generator
) -> DiscreteVectorField:
    """A random acyclic matching built by greedy insertion.

    Facet relations are visited in random order; a pair is kept when both
    simplices are still unmatched and it closes no V-path cycle.
    """
    relations = list(complex_.facet_relations())
    order = rng.permutation(len(relations))
    matched: set[Simplex] = set()
    graphs: dict[int, nx.DiGraph] = {}
    pairs: list[Pair] = []
    for index in order:
        sigma, tau = relations[int(index)]
        if sigma in matched or tau in matched:
            continue
        graph = graphs.setdefault(tau.dim, nx.DiGraph())
        others = [o for o in sigma.facets() if o != tau]
        if any(o in graph and tau in graph and nx.has_path(graph, o, tau) for o in others):
            continue
        graph.add_edges_from((tau, o) for o in others)
        matched.update((sigma, tau))
        pairs.append((tau, sigma))
    return DiscreteVectorField.from_pairs(pairs)
