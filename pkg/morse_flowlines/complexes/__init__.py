"""Simplicial complexes, vector fields and modified Hasse diagrams."""

from morse_flowlines.complexes.field import (
    CriticalityClass,
    DiscreteVectorField,
    MorseFunction,
    canonical_morse_function,
    classify,
    critical_simplices,
    field_from_morse,
    is_gradient,
    random_gradient_field,
    v_paths,
    validate_field,
    validate_morse_function,
)
from morse_flowlines.complexes.generators import (
    gen_full_simplex,
    gen_graph_property_complex,
    gen_rp2_preset,
    gen_sphere_preset,
    gen_two_triangle_preset,
    gen_two_triangles,
)
from morse_flowlines.complexes.graph_properties import GraphProperty
from morse_flowlines.complexes.hasse import ArrowKind, ModifiedHasseDiagram, build_modified_hasse
from morse_flowlines.complexes.simplex import (
    Simplex,
    SimplicialComplex,
    arrow_sign,
    build_complex,
    cofacets,
    facets,
)

__all__ = [
    "ArrowKind",
    "CriticalityClass",
    "DiscreteVectorField",
    "GraphProperty",
    "ModifiedHasseDiagram",
    "MorseFunction",
    "Simplex",
    "SimplicialComplex",
    "arrow_sign",
    "build_complex",
    "build_modified_hasse",
    "canonical_morse_function",
    "classify",
    "cofacets",
    "critical_simplices",
    "facets",
    "field_from_morse",
    "gen_full_simplex",
    "gen_graph_property_complex",
    "gen_rp2_preset",
    "gen_sphere_preset",
    "gen_two_triangle_preset",
    "gen_two_triangles",
    "is_gradient",
    "random_gradient_field",
    "v_paths",
    "validate_field",
    "validate_morse_function",
]
