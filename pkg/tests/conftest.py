"""Shared complexes, fields and diagrams for the test suite."""

from collections.abc import Callable

import numpy as np
import pytest

from morse_flowlines.complexes.field import DiscreteVectorField, random_gradient_field
from morse_flowlines.complexes.generators import (
    gen_full_simplex,
    gen_graph_property_complex,
    gen_rp2_preset,
    gen_sphere_preset,
    gen_two_triangle_preset,
)
from morse_flowlines.complexes.graph_properties import max_degree, max_edges, no_hamiltonian_cycle
from morse_flowlines.complexes.hasse import ModifiedHasseDiagram, build_modified_hasse
from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex, build_complex
from morse_flowlines.flow.paths import Flowline

RP2_RED = "4-5-6,4-6,3-4-6,3-4,1-3-4,1-3,1"
RP2_BLUE = "4-5-6,5-6,1-5-6,1-5,1-3-5,1-3,3,2-3,2,1-2,1"
SPHERE_START = "1-2-3,1-2,1-2-4,1-4,4"


def s(name: str) -> Simplex:
    """Shorthand for ``Simplex.parse``."""
    return Simplex.parse(name)


@pytest.fixture
def triangle():
    """The closed 2-simplex on vertices 1, 2, 3."""
    return build_complex([s("1-2-3")])


@pytest.fixture
def triangle_diagram(triangle):
    """The 2-simplex with the empty field."""
    return build_modified_hasse(triangle, DiscreteVectorField())


@pytest.fixture
def sphere():
    """Tetrahedron boundary with its preset field."""
    return gen_sphere_preset()


@pytest.fixture
def sphere_diagram(sphere) -> ModifiedHasseDiagram:
    return build_modified_hasse(*sphere)


@pytest.fixture
def rp2():
    """Six-vertex projective plane with its preset field."""
    return gen_rp2_preset()


@pytest.fixture
def rp2_diagram(rp2) -> ModifiedHasseDiagram:
    return build_modified_hasse(*rp2)


@pytest.fixture
def two_triangles():
    """Two triangles sharing 2-3, their Morse-function field and the function."""
    return gen_two_triangle_preset()


@pytest.fixture
def two_triangle_diagram(two_triangles) -> ModifiedHasseDiagram:
    complex_, field_, _ = two_triangles
    return build_modified_hasse(complex_, field_)


@pytest.fixture
def red_flowline(rp2_diagram) -> Flowline:
    return Flowline.parse(rp2_diagram, RP2_RED)


@pytest.fixture
def blue_flowline(rp2_diagram) -> Flowline:
    return Flowline.parse(rp2_diagram, RP2_BLUE)


@pytest.fixture
def sphere_flowline(sphere_diagram) -> Flowline:
    return Flowline.parse(sphere_diagram, SPHERE_START)


# Complexes the randomized suites draw from: full simplices up to dimension
# 4, the presets, and small complexes of graphs with a monotone property.
CORPUS_COMPLEXES: dict[str, Callable[[], SimplicialComplex]] = {
    "sphere": lambda: gen_sphere_preset()[0],
    "rp2": lambda: gen_rp2_preset()[0],
    "two-triangles": lambda: gen_two_triangle_preset()[0],
    "simplex-1": lambda: gen_full_simplex(1),
    "simplex-2": lambda: gen_full_simplex(2),
    "simplex-3": lambda: gen_full_simplex(3),
    "simplex-4": lambda: gen_full_simplex(4),
    "graph-4-max-edges-3": lambda: gen_graph_property_complex(4, max_edges(3)),
    "graph-4-no-hamiltonian-cycle": lambda: gen_graph_property_complex(4, no_hamiltonian_cycle()),
    "graph-5-max-edges-2": lambda: gen_graph_property_complex(5, max_edges(2)),
    "graph-5-max-degree-1": lambda: gen_graph_property_complex(5, max_degree(1)),
}


def corpus_diagrams() -> list[tuple[str, ModifiedHasseDiagram]]:
    """Named diagrams: the presets with their fields, the rest with the empty field."""
    two_complex, two_field, _ = gen_two_triangle_preset()
    diagrams = [
        ("sphere", build_modified_hasse(*gen_sphere_preset())),
        ("rp2", build_modified_hasse(*gen_rp2_preset())),
        ("two-triangles", build_modified_hasse(two_complex, two_field)),
    ]
    for name, build in CORPUS_COMPLEXES.items():
        if name.startswith(("simplex", "graph")):
            diagrams.append((name, build_modified_hasse(build(), DiscreteVectorField())))
    return diagrams


def random_diagram(name: str, seed: int) -> ModifiedHasseDiagram:
    """A corpus complex with a random gradient field drawn from ``seed``."""
    complex_ = CORPUS_COMPLEXES[name]()
    field_ = random_gradient_field(complex_, np.random.default_rng(seed))
    return build_modified_hasse(complex_, field_)
