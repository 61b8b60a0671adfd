"""Generators for example complexes and graph-property complexes.

Presets return a complex together with its vector field (and, for the
two-triangle example, the Morse function the field comes from).
"""

from collections.abc import Sequence

from morse_flowlines.complexes.field import DiscreteVectorField, MorseFunction, field_from_morse
from morse_flowlines.complexes.graph_properties import GraphProperty, complete_graph_edges
from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex, build_complex
from morse_flowlines.errors import PropertyViolationError
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


def _s(name: str) -> Simplex:
    return Simplex.parse(name)


def _pairs(names: Sequence[tuple[str, str]]) -> DiscreteVectorField:
    return DiscreteVectorField.from_pairs((_s(a), _s(b)) for a, b in names)


def gen_full_simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    return build_complex([Simplex(tuple(range(n + 1)))])


def gen_sphere_preset() -> tuple[SimplicialComplex, DiscreteVectorField]:
    """Boundary of the tetrahedron on 1..4 with critical cells 1-2-3 and 4."""
    complex_ = build_complex(_s(t) for t in ("1-2-3", "1-2-4", "1-3-4", "2-3-4"))
    field_ = _pairs(
        [
            ("1-2", "1-2-4"),
            ("1-3", "1-3-4"),
            ("2-3", "2-3-4"),
            ("1", "1-4"),
            ("2", "2-4"),
            ("3", "3-4"),
        ]
    )
    return complex_, field_


RP2_TRIANGLES = (
    "1-2-4",
    "1-2-6",
    "1-3-4",
    "1-3-5",
    "1-5-6",
    "2-3-5",
    "2-3-6",
    "2-4-5",
    "3-4-6",
    "4-5-6",
)


def gen_rp2_preset() -> tuple[SimplicialComplex, DiscreteVectorField]:
    """Six-vertex projective plane; critical cells 4-5-6, 1-3 and 1."""
    complex_ = build_complex(_s(t) for t in RP2_TRIANGLES)
    field_ = _pairs(
        [
            ("2", "1-2"),
            ("3", "2-3"),
            ("4", "2-4"),
            ("5", "3-5"),
            ("6", "1-6"),
            ("3-4", "1-3-4"),
            ("4-6", "3-4-6"),
            ("3-6", "2-3-6"),
            ("2-6", "1-2-6"),
            ("1-4", "1-2-4"),
            ("2-5", "2-3-5"),
            ("1-5", "1-3-5"),
            ("4-5", "2-4-5"),
            ("5-6", "1-5-6"),
        ]
    )
    return complex_, field_


TWO_TRIANGLE_VALUES = {
    "1": 3.0,
    "2": 1.5,
    "3": 2.1,
    "4": 0.0,
    "1-2": 2.0,
    "1-3": 15.0,
    "2-3": 2.0,
    "3-4": 12.0,
    "2-4": 1.2,
    "1-2-3": 13.0,
    "2-3-4": 11.0,
}


def gen_two_triangles() -> SimplicialComplex:
    """Two triangles 1-2-3 and 2-3-4 sharing the edge 2-3."""
    return build_complex([_s("1-2-3"), _s("2-3-4")])


def gen_two_triangle_preset() -> tuple[SimplicialComplex, DiscreteVectorField, MorseFunction]:
    """Two triangles with a Morse function whose only critical cell is vertex 4."""
    complex_ = gen_two_triangles()
    morse = MorseFunction({_s(name): value for name, value in TWO_TRIANGLE_VALUES.items()})
    return complex_, field_from_morse(morse, complex_), morse


def gen_graph_property_complex(n: int, prop: GraphProperty) -> SimplicialComplex:
    """Complex of nonempty edge sets of K_n satisfying ``prop``.

    Vertex i of the result is the i-th edge of K_n in lexicographic order;
    a d-simplex is a (d+1)-edge spanning subgraph with the property.

    Raises:
        ValueError: If ``n`` < 2.
        PropertyViolationError: If a graph has the property while one of its
            one-edge-smaller subgraphs does not.
    """
    if n < 2:
        raise ValueError(f"need at least 2 graph vertices, got {n}")
    edges = complete_graph_edges(n)

    def holds(simplex: tuple[int, ...]) -> bool:
        return prop.holds(n, (edges[i] for i in simplex))

    level = [(i,) for i in range(len(edges)) if holds((i,))]
    simplices = list(level)
    while level:
        members = set(level)
        next_level = []
        for base in level:
            for extra in range(base[-1] + 1, len(edges)):
                candidate = base + (extra,)
                if not holds(candidate):
                    continue
                for drop in range(len(candidate)):
                    face = candidate[:drop] + candidate[drop + 1 :]
                    if face not in members:
                        raise PropertyViolationError(
                            f"{prop.tag} is not monotone decreasing: "
                            f"{list(candidate)} satisfies it but {list(face)} does not"
                        )
                next_level.append(candidate)
        level = next_level
        simplices.extend(level)

    complex_ = SimplicialComplex((Simplex(s) for s in simplices), vertices=range(len(edges)))
    logger.info(
        "graph property complex built",
        n=n,
        property=prop.tag,
        f_vector=list(complex_.f_vector),
    )
    return complex_
