"""Tests for the coloring constructions."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from tests.conftest import complete, cycle
from tests.strategies import connected_graphs, two_connected_graphs
from tpconn.errors import ConstructionError, StructureError
from tpconn.models.coloring import ColoringMethod
from tpconn.models.graph import Graph
from tpconn.services.constructors import (
    color_2connected,
    color_complete,
    color_complete_bipartite,
    color_complete_bipartite_graph,
    color_complete_multipartite,
    color_cycle,
    color_cycle_graph,
    color_general,
    color_min_degree,
    color_phase,
    color_traceable,
    color_tree,
    construct,
)
from tpconn.services.families import generate, make_spec
from tpconn.services.formats import serialize_coloring
from tpconn.services.structure import (
    dominating_set_bound,
    structure_profile,
    two_way_two_step_dominating_set,
)
from tpconn.services.verifier import has_strong_property, is_total_proper_connected


def _general_bound(g: Graph) -> int:
    return max(structure_profile(g).bridge_max_degree + 1, 4)


class TestSmallFamilies:
    """Tests for complete graphs, trees and cycles."""

    def test_complete(self, k4, c4):
        """Test one color on a complete graph only."""
        assert color_complete(k4).color_count == 1
        with pytest.raises(StructureError):
            color_complete(c4)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_trees(self, n):
        """Test that every tree gets exactly Δ+1 colors."""
        for h in nx.nonisomorphic_trees(n):
            t, _ = Graph.from_networkx(h)
            c = color_tree(t)
            assert c.color_count == t.max_degree + 1
            assert is_total_proper_connected(t, c).connected

    def test_tree_preconditions(self, c4):
        """Test that cycles and single edges are refused."""
        with pytest.raises(StructureError):
            color_tree(c4)
        with pytest.raises(StructureError):
            color_tree(Graph.from_edges(2, [(0, 1)]))

    @pytest.mark.parametrize("n", range(4, 13))
    def test_cycle_golden(self, data_dir, n):
        """Test the alternating cycle colorings against stored files."""
        expected = (data_dir / f"cycle_{n}.col").read_text()
        assert serialize_coloring(color_cycle(n)) == expected

    def test_triangle_is_not_a_cycle_case(self):
        """Test that C3 is left to the complete construction."""
        with pytest.raises(StructureError):
            color_cycle(3)

    def test_cycle_with_other_labels(self):
        """Test a cycle whose labels do not follow the cycle order."""
        g = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (0, 3)])
        c = color_cycle_graph(g)
        assert c.color_count == 4
        assert has_strong_property(g, c).holds

    def test_cycle_graph_rejects_others(self, p4):
        """Test that non-cycles are refused."""
        with pytest.raises(StructureError):
            color_cycle_graph(p4)


class TestMultipartite:
    """Tests for complete bipartite and multipartite graphs."""

    @pytest.mark.parametrize(("m", "n"), [(m, n) for m in range(2, 7) for n in range(m, 7)])
    def test_complete_bipartite(self, m, n):
        """Test three colors on every K_{m,n} with 2 <= m <= n <= 6."""
        c = color_complete_bipartite(m, n)
        assert c.host.n == m + n
        assert c.color_count == 3

    def test_stars_and_edges(self):
        """Test the degenerate bipartite cases."""
        assert color_complete_bipartite(1, 1).color_count == 1
        assert color_complete_bipartite(1, 4).color_count == 5

    def test_bipartite_argument_errors(self):
        """Test part size checks."""
        with pytest.raises(StructureError):
            color_complete_bipartite(3, 2)
        with pytest.raises(StructureError):
            color_complete_bipartite(0, 2)

    def test_bipartite_graph_input(self, k23, c5):
        """Test recognizing the parts of a given graph."""
        assert color_complete_bipartite_graph(k23).color_count == 3
        with pytest.raises(StructureError):
            color_complete_bipartite_graph(c5)

    @pytest.mark.parametrize("parts", [(2, 2, 2), (1, 2, 3), (1, 1, 3), (3, 3), (2, 2, 2, 2)])
    def test_complete_multipartite(self, parts):
        """Test three colors on multipartite graphs that are not complete or stars."""
        c = color_complete_multipartite(parts)
        assert c.host.n == sum(parts)
        assert c.color_count == 3

    def test_multipartite_complete_case(self):
        """Test that singleton parts give a complete graph."""
        assert color_complete_multipartite((1, 1, 1)).color_count == 1


class TestTwoConnected:
    """Tests for the ear-by-ear construction."""

    @pytest.mark.parametrize("fixture", ["c4", "c5", "k4", "k23", "petersen"])
    def test_known_graphs(self, request, fixture):
        """Test at most four colors and the strong property."""
        g = request.getfixturevalue(fixture)
        c = color_2connected(g)
        assert c.color_count <= 4
        assert has_strong_property(g, c).holds

    def test_prop3(self):
        """Test the four-color construction on prop3(2)."""
        g, _ = generate(make_spec("prop3", (2,)))
        c = color_2connected(g)
        assert c.color_count <= 4
        assert is_total_proper_connected(g, c).connected

    def test_requires_two_connected(self, bowtie):
        """Test the 2-connectivity precondition."""
        with pytest.raises(StructureError):
            color_2connected(bowtie)

    @given(two_connected_graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_random_two_connected(self, g):
        """Test the bound and the strong property on generated graphs."""
        c = color_2connected(g)
        assert c.color_count <= 4
        assert has_strong_property(g, c).holds

    @pytest.mark.slow
    def test_seeded_sweep(self):
        """Test 200 seeded random 2-connected graphs with up to 12 vertices."""
        rng = random.Random(7)
        for seed in range(200):
            g, _ = generate(make_spec("random_2connected", (rng.randint(3, 12),), seed))
            c = color_2connected(g)
            assert c.color_count <= 4, seed
            assert has_strong_property(g, c).holds, seed


class TestGeneral:
    """Tests for the block-by-block construction."""

    @pytest.mark.parametrize("fixture", ["p4", "star3", "lollipop", "bowtie", "c5"])
    def test_known_graphs(self, request, fixture):
        """Test the max(Δ̃+1, 4) bound."""
        g = request.getfixturevalue(fixture)
        c = color_general(g)
        assert c.color_count <= _general_bound(g)

    def test_many_bridges_at_one_vertex(self):
        """Test a triangle with four pendant edges at one corner."""
        g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)])
        c = color_general(g)
        assert _general_bound(g) == 7
        assert c.color_count <= 7

    def test_complete_and_small(self, k4):
        """Test the complete shortcut and the size precondition."""
        assert color_general(k4).color_count == 1
        with pytest.raises(StructureError):
            color_general(Graph(n=1))

    @given(connected_graphs(min_n=2, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_random_connected(self, g):
        """Test the bound on generated connected graphs."""
        c = color_general(g)
        assert c.color_count <= _general_bound(g)

    @pytest.mark.slow
    def test_seeded_sweep(self):
        """Test 200 seeded random connected graphs with up to 14 vertices."""
        rng = random.Random(11)
        for seed in range(200):
            n = rng.randint(2, 14)
            m = rng.randint(n - 1, min(n * (n - 1) // 2, 2 * n))
            g, _ = generate(make_spec("random_connected", (n, m), seed))
            assert color_general(g).color_count <= _general_bound(g), seed


class TestMinDegree:
    """Tests for the dominating set construction."""

    def test_petersen(self, petersen):
        """Test at most |D| + 3 colors."""
        g = petersen
        c = color_min_degree(g)
        assert c.color_count <= len(two_way_two_step_dominating_set(g)) + 3

    def test_random_forty_vertices(self):
        """Test n = 40, minimum degree 4, seed 7 against the 3n/(δ+1) bounds."""
        g, _ = generate(make_spec("random_min_degree", (40, 4), 7))
        dset = two_way_two_step_dominating_set(g)
        assert len(dset) <= dominating_set_bound(g)
        c = color_min_degree(g)
        assert c.color_count <= 3 * 40 // (g.min_degree + 1) + 1 <= 25
        assert is_total_proper_connected(g, c).connected

    def test_too_small(self):
        """Test the n >= 4 precondition."""
        with pytest.raises(StructureError):
            color_min_degree(complete(3))

    @pytest.mark.slow
    @pytest.mark.parametrize("delta", [3, 4, 5])
    def test_seeded_sweep(self, delta):
        """Test seeded random graphs with minimum degree at least delta."""
        rng = random.Random(delta)
        for seed in range(17):
            n = rng.randint(20, 60)
            g, _ = generate(make_spec("random_min_degree", (n, delta), seed))
            assert g.min_degree >= delta
            dset = two_way_two_step_dominating_set(g)
            assert len(dset) <= dominating_set_bound(g), seed
            c = color_min_degree(g)
            assert c.color_count <= len(dset) + 3, seed
            assert c.color_count <= 3 * g.n // (g.min_degree + 1) + 1, seed


class TestTraceableAndPhase:
    """Tests for Hamiltonian path and phase colorings."""

    def test_traceable(self, petersen):
        """Test three colors along a found Hamiltonian path."""
        assert color_traceable(petersen).color_count == 3

    def test_given_path(self, p4):
        """Test a caller-supplied Hamiltonian path."""
        assert color_traceable(p4, [3, 2, 1, 0]).color_count == 3

    def test_invalid_paths(self, c5, star3):
        """Test missing and malformed Hamiltonian paths."""
        with pytest.raises(StructureError, match="not adjacent"):
            color_traceable(c5, [0, 2, 1, 3, 4])
        with pytest.raises(StructureError, match="every vertex"):
            color_traceable(c5, [0, 1, 2])
        with pytest.raises(StructureError, match="no Hamiltonian path"):
            color_traceable(star3)

    def test_phase(self, c5):
        """Test the phase construction and its failure case."""
        assert color_phase(cycle(6)).color_count == 3
        with pytest.raises(ConstructionError):
            color_phase(c5)


class TestConstruct:
    """Tests for dispatch by method name."""

    @pytest.mark.parametrize(
        ("method", "fixture", "colors"),
        [
            (ColoringMethod.COMPLETE, "k4", 1),
            (ColoringMethod.TREE, "star3", 4),
            (ColoringMethod.CYCLE, "c4", 4),
            (ColoringMethod.COMPLETE_BIPARTITE, "k23", 3),
            (ColoringMethod.TRACEABLE, "p4", 3),
        ],
    )
    def test_dispatch(self, request, method, fixture, colors):
        """Test that each method reaches its construction."""
        g = request.getfixturevalue(fixture)
        assert construct(method, g).color_count == colors

    def test_errors_pass_through(self, c4):
        """Test that shape errors surface unchanged."""
        with pytest.raises(StructureError):
            construct(ColoringMethod.TREE, c4)
