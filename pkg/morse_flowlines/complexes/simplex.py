"""Simplices and simplicial complexes.

Vertices are non-negative integers and their numeric order is the global
vertex order every orientation and sign is taken from. Simplices are kept
in canonical sorted form, complexes are face-closed and immutable.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import chain

import numpy as np

from morse_flowlines.errors import (
    MalformedSimplexError,
    NotAFacetError,
    NotInComplexError,
    PropertyViolationError,
)
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex as a strictly increasing tuple of vertex ids."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise MalformedSimplexError("a simplex needs at least one vertex")
        for v in self.vertices:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise MalformedSimplexError(f"vertex ids must be non-negative integers, got {v!r}")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:], strict=False)):
            raise MalformedSimplexError(
                f"vertices must be strictly increasing, got {list(self.vertices)}"
            )

    @classmethod
    def of(cls, *vertices: int) -> "Simplex":
        """Build a simplex from vertices in any order, rejecting repeats."""
        return cls.from_iterable(vertices)

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> "Simplex":
        """Build a simplex from an iterable of vertex ids in any order.

        Raises:
            MalformedSimplexError: If a vertex repeats or the iterable is empty.
        """
        items = list(vertices)
        if len(set(items)) != len(items):
            raise MalformedSimplexError(f"duplicate vertices in simplex {items}")
        return cls(tuple(sorted(items)))

    @classmethod
    def parse(cls, name: str) -> "Simplex":
        """Parse the hyphen-joined form used on the command line (``1-2-3``)."""
        try:
            return cls.from_iterable(int(part) for part in name.strip().split("-"))
        except ValueError as e:
            if isinstance(e, MalformedSimplexError):
                raise
            raise MalformedSimplexError(f"cannot parse simplex name {name!r}") from e

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def name(self) -> str:
        return "-".join(str(v) for v in self.vertices)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Simplex({self.name})"

    def without(self, position: int) -> "Simplex":
        """The facet obtained by deleting the vertex at ``position``."""
        return Simplex(self.vertices[:position] + self.vertices[position + 1 :])

    def facets(self) -> tuple["Simplex", ...]:
        """Facets ordered by the position of the removed vertex."""
        if self.dim == 0:
            return ()
        return tuple(self.without(i) for i in range(len(self.vertices)))

    def is_facet_of(self, other: "Simplex") -> bool:
        return other.dim == self.dim + 1 and set(self.vertices) <= set(other.vertices)

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def removed_position(self, facet: "Simplex") -> int:
        """Position in this simplex of the vertex ``facet`` lacks.

        Raises:
            NotAFacetError: If ``facet`` is not a facet of this simplex.
        """
        if not facet.is_facet_of(self):
            raise NotAFacetError(f"{facet} is not a facet of {self}")
        (missing,) = set(self.vertices) - set(facet.vertices)
        return self.vertices.index(missing)


def facets(sigma: Simplex) -> frozenset[Simplex]:
    """All facets of ``sigma``; empty for a vertex."""
    return frozenset(sigma.facets())


def arrow_sign(sigma: Simplex, tau: Simplex) -> int:
    """Sign (-1)^i of the Hasse arrow between ``sigma`` and its facet ``tau``.

    ``i`` is the 0-based position in ``sigma`` of the vertex removed to get
    ``tau``. The sign is the same whichever way the arrow points.

    Raises:
        NotAFacetError: If ``tau`` is not a facet of ``sigma``.
    """
    return -1 if sigma.removed_position(tau) % 2 else 1


class SimplicialComplex:
    """A finite face-closed family of simplices, grouped by dimension.

    Iteration is by dimension, then lexicographically within a dimension.
    """

    def __init__(self, simplices: Iterable[Simplex], vertices: Iterable[int] | None = None) -> None:
        members = frozenset(simplices)
        support = sorted({v for s in members for v in s.vertices})
        universe = tuple(sorted(set(vertices))) if vertices is not None else tuple(support)
        stray = set(support) - set(universe)
        if stray:
            raise PropertyViolationError(
                f"simplices use vertices {sorted(stray)} outside the vertex universe"
            )
        for sigma in members:
            for tau in sigma.facets():
                if tau not in members:
                    raise PropertyViolationError(
                        f"complex is not face-closed: facet {tau} of {sigma} is missing"
                    )

        top = max((s.dim for s in members), default=-1)
        self._members = members
        self._vertices = universe
        self._by_dim: tuple[tuple[Simplex, ...], ...] = tuple(
            tuple(sorted(s for s in members if s.dim == p)) for p in range(top + 1)
        )
        cofaces: dict[Simplex, list[Simplex]] = {s: [] for s in members}
        for sigma in members:
            for tau in sigma.facets():
                cofaces[tau].append(sigma)
        self._cofacets = {s: tuple(sorted(c)) for s, c in cofaces.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def top_dimension(self) -> int:
        return len(self._by_dim) - 1

    def simplices(self, p: int | None = None) -> tuple[Simplex, ...]:
        """Simplices of dimension ``p``, or all of them when ``p`` is None."""
        if p is None:
            return tuple(chain.from_iterable(self._by_dim))
        if p < 0 or p >= len(self._by_dim):
            return ()
        return self._by_dim[p]

    def cofacets(self, sigma: Simplex) -> tuple[Simplex, ...]:
        """Simplices of the complex having ``sigma`` as a facet.

        Raises:
            NotInComplexError: If ``sigma`` is not in the complex.
        """
        try:
            return self._cofacets[sigma]
        except KeyError:
            raise NotInComplexError(f"simplex {sigma} is not in the complex") from None

    def require(self, sigma: Simplex) -> Simplex:
        """Return ``sigma`` unchanged, raising if it is not a member."""
        if sigma not in self._members:
            raise NotInComplexError(f"simplex {sigma} is not in the complex")
        return sigma

    def facet_relations(self) -> Iterator[tuple[Simplex, Simplex]]:
        """All (sigma, tau) with tau a facet of sigma, deterministic order."""
        for sigma in self.simplices():
            for tau in sigma.facets():
                yield sigma, tau

    def maximal_simplices(self) -> tuple[Simplex, ...]:
        return tuple(s for s in self.simplices() if not self._cofacets[s])

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._by_dim)

    @property
    def euler_characteristic(self) -> int:
        counts = np.array(self.f_vector, dtype=np.int64)
        signs = np.where(np.arange(len(counts)) % 2 == 0, 1, -1)
        return int(np.dot(counts, signs))

    def __contains__(self, sigma: object) -> bool:
        return sigma in self._members

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices())

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._members == other._members and self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash((self._members, self._vertices))

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector})"


def build_complex(
    maximal_simplices: Iterable[Simplex], vertices: Iterable[int] | None = None
) -> SimplicialComplex:
    """Downward closure of the given simplices.

    Args:
        maximal_simplices: Generating simplices, each in canonical form.
        vertices: Optional vertex universe; defaults to the vertices used.

    Returns:
        The smallest complex containing every input simplex.
    """
    closed: set[Simplex] = set()
    stack = list(maximal_simplices)
    while stack:
        sigma = stack.pop()
        if sigma in closed:
            continue
        closed.add(sigma)
        stack.extend(sigma.facets())
    complex_ = SimplicialComplex(closed, vertices)
    logger.debug("complex built", f_vector=list(complex_.f_vector))
    return complex_


def cofacets(sigma: Simplex, complex_: SimplicialComplex) -> frozenset[Simplex]:
    """All simplices of ``complex_`` having ``sigma`` as a facet."""
    return frozenset(complex_.cofacets(sigma))
