"""Tests for moduli spaces of index 2 flowlines."""

import networkx as nx
import pytest
from conftest import corpus_diagrams, random_diagram, s
from hypothesis import given, settings
from hypothesis import strategies as st

from morse_flowlines.complexes.field import critical_simplices
from morse_flowlines.errors import (
    InvariantViolationError,
    TruncatedEnumerationError,
    UnboundedEnumerationError,
)
from morse_flowlines.flow.moduli import (
    ComponentKind,
    ModuliSpace,
    boundary,
    build_moduli,
    components,
)
from morse_flowlines.flow.paths import Flowline


def all_moduli(diagram):
    complex_, field_ = diagram.complex, diagram.field
    for p in range(1, complex_.top_dimension):
        for alpha in critical_simplices(complex_, field_, p + 1):
            for gamma in critical_simplices(complex_, field_, p - 1):
                yield build_moduli(alpha, gamma, diagram)


class TestSphereModuli:
    """Tests for M(1-2-3, 4) on the tetrahedron boundary."""

    def test_single_cycle(self, sphere_diagram):
        moduli = build_moduli(s("1-2-3"), s("4"), sphere_diagram)
        assert len(moduli) == 12
        assert len(moduli.edges) == 12
        (component,) = components(moduli)
        assert component.kind is ComponentKind.CYCLE
        assert len(component) == 12
        assert component.endpoints == ()
        assert boundary(moduli) == []

    def test_every_vertex_has_degree_two(self, sphere_diagram):
        moduli = build_moduli(s("1-2-3"), s("4"), sphere_diagram)
        assert all(moduli.degree(f) == 2 for f in moduli.vertices)

    def test_workers_give_same_graph(self, sphere_diagram):
        serial = build_moduli(s("1-2-3"), s("4"), sphere_diagram)
        threaded = build_moduli(s("1-2-3"), s("4"), sphere_diagram, workers=2)
        assert serial.vertices == threaded.vertices
        assert serial.edges == threaded.edges


class TestProjectivePlaneModuli:
    """Tests for M(4-5-6, 1) on the projective plane."""

    def test_two_paths(self, rp2_diagram):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        found = components(moduli)
        assert len(found) == 2
        assert all(c.kind is ComponentKind.PATH for c in found)
        assert len(boundary(moduli)) == 4

    def test_boundary_signs_cancel_per_component(self, rp2_diagram):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        for component in components(moduli):
            assert len(component.endpoints) == 2
            assert sum(f.sign for f in component.endpoints) == 0

    def test_boundary_is_the_critical_flowlines(self, rp2_diagram):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        assert {f for f, _ in boundary(moduli)} == {f for f in moduli.vertices if f.critical}

    def test_red_and_blue_are_equivalent(self, rp2_diagram, red_flowline, blue_flowline):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        assert moduli.equivalent(red_flowline, blue_flowline)

    def test_path_walks_from_end_to_end(self, rp2_diagram):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        for component in components(moduli):
            assert component.flowlines[0] in component.endpoints
            assert component.flowlines[-1] in component.endpoints
            assert not any(f.critical for f in component.flowlines[1:-1])


class TestTriangleModuli:
    def test_one_path(self, triangle_diagram):
        moduli = build_moduli(s("1-2-3"), s("1"), triangle_diagram)
        (component,) = components(moduli)
        assert component.kind is ComponentKind.PATH
        assert len(component) == 2
        assert sorted(sign for _, sign in boundary(moduli)) == [-1, 1]


class TestModuliStructure:
    """Structural checks on every moduli space of the corpus."""

    @pytest.mark.parametrize(("name", "diagram"), corpus_diagrams())
    def test_degree_at_most_two(self, name, diagram):
        for moduli in all_moduli(diagram):
            assert all(moduli.degree(f) <= 2 for f in moduli.vertices)

    @pytest.mark.parametrize(("name", "diagram"), corpus_diagrams())
    def test_boundary_is_exactly_the_critical_flowlines(self, name, diagram):
        for moduli in all_moduli(diagram):
            for flowline in moduli.vertices:
                assert (moduli.degree(flowline) <= 1) == flowline.critical

    @pytest.mark.parametrize(("name", "diagram"), corpus_diagrams())
    def test_boundary_signs_sum_to_zero(self, name, diagram):
        for moduli in all_moduli(diagram):
            assert sum(sign for _, sign in boundary(moduli)) == 0

    @pytest.mark.parametrize(("name", "diagram"), corpus_diagrams())
    def test_cycles_hold_no_critical_flowlines(self, name, diagram):
        for moduli in all_moduli(diagram):
            for component in components(moduli):
                if component.kind is ComponentKind.CYCLE:
                    assert not any(f.critical for f in component.flowlines)

    @settings(max_examples=60, deadline=None)
    @given(
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        name=st.sampled_from(
            ["sphere", "rp2", "two-triangles", "simplex-3", "graph-4-max-edges-3"]
        ),
    )
    def test_random_fields(self, seed, name):
        """Test the path and cycle structure on random gradient fields."""
        diagram = random_diagram(name, seed)
        for moduli in all_moduli(diagram):
            for component in components(moduli):
                if component.kind is ComponentKind.PATH:
                    first, second = component.endpoints
                    assert first != second
                    assert first.sign + second.sign == 0
                else:
                    assert component.endpoints == ()
                start = component.flowlines[0]
                assert all(moduli.equivalent(start, f) for f in component.flowlines)


class TestLengthCap:
    """Moduli spaces built under a path length cap."""

    def test_full_space_without_cap(self, rp2_diagram):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        assert len(moduli) == 32
        assert len(boundary(moduli)) == 4

    def test_cap_that_cuts_successors_raises(self, rp2_diagram):
        with pytest.raises(TruncatedEnumerationError, match="max_len=8"):
            build_moduli(s("4-5-6"), s("1"), rp2_diagram, max_len=8)

    def test_cap_error_is_a_usage_error(self):
        assert issubclass(TruncatedEnumerationError, UnboundedEnumerationError)

    def test_generous_cap_gives_full_space(self, rp2_diagram):
        capped = build_moduli(s("4-5-6"), s("1"), rp2_diagram, max_len=40)
        full = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        assert capped.vertices == full.vertices
        assert capped.edges == full.edges


class TestModuliInvariants:
    """The constructor rejects graphs that are not 1-manifolds with critical ends."""

    def test_noncritical_end_rejected(self, rp2_diagram):
        noncritical = Flowline.parse(rp2_diagram, "4-5-6,4-5,5,3-5,3,2-3,2,1-2,1")
        assert not noncritical.critical
        graph = nx.Graph()
        graph.add_node(noncritical)
        with pytest.raises(InvariantViolationError, match="noncritical"):
            ModuliSpace(s("4-5-6"), s("1"), graph)

    def test_critical_vertex_of_degree_two_rejected(self, rp2_diagram, red_flowline):
        moduli = build_moduli(s("4-5-6"), s("1"), rp2_diagram)
        graph = nx.Graph(moduli.graph)
        others = [
            f for f in moduli.vertices if f != red_flowline and not graph.has_edge(red_flowline, f)
        ]
        graph.add_edge(red_flowline, others[0])
        with pytest.raises(InvariantViolationError):
            ModuliSpace(s("4-5-6"), s("1"), graph)

    def test_degree_three_rejected(self, sphere_diagram):
        moduli = build_moduli(s("1-2-3"), s("4"), sphere_diagram)
        graph = nx.Graph(moduli.graph)
        first = moduli.vertices[0]
        other = next(f for f in moduli.vertices if f != first and not graph.has_edge(first, f))
        graph.add_edge(first, other)
        with pytest.raises(InvariantViolationError, match="degree 3"):
            ModuliSpace(s("1-2-3"), s("4"), graph)
