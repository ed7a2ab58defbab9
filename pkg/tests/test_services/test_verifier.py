"""Tests for connectivity verdicts and the strong property."""

import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tests.conftest import cycle
from tests.strategies import colorings, connected_graphs, palette_permutations
from tpconn.errors import NotConnectedError, StructureError
from tpconn.models.coloring import ConnectionMode, TotalColoring
from tpconn.models.graph import Graph
from tpconn.services.constructors import color_cycle
from tpconn.services.families import generate, make_spec
from tpconn.services.paths import is_total_proper_path
from tpconn.services.verifier import (
    exists_total_proper_path,
    has_strong_property,
    is_total_proper_connected,
)


class TestExistsTotalProperPath:
    """Tests for single-pair queries."""

    def test_witness_is_proper(self, c5):
        """Test that a returned witness is a total proper path."""
        c = color_cycle(5)
        witness = exists_total_proper_path(c5, c, 0, 2)
        assert witness is not None
        assert (witness.start, witness.end) == (0, 2)
        assert is_total_proper_path(c5, c, witness)

    def test_none_when_missing(self, c4):
        """Test a pair with no total proper path."""
        assert exists_total_proper_path(c4, TotalColoring.uniform(c4), 0, 2) is None

    def test_invalid_pairs(self, c4):
        """Test equal and out-of-range endpoints."""
        c = TotalColoring.uniform(c4)
        with pytest.raises(StructureError):
            exists_total_proper_path(c4, c, 1, 1)
        with pytest.raises(StructureError):
            exists_total_proper_path(c4, c, 0, 7)

    def test_wrong_host(self, c4, c5):
        """Test that the coloring must belong to the graph."""
        with pytest.raises(StructureError):
            exists_total_proper_path(c5, TotalColoring.uniform(c4), 0, 1)


class TestIsTotalProperConnected:
    """Tests for whole-graph verdicts."""

    def test_monochromatic_c4_fails(self, c4):
        """Test that one color on C4 leaves opposite vertices unconnected."""
        report = is_total_proper_connected(c4, TotalColoring.uniform(c4))
        assert not report.connected
        assert report.verdict == "FAIL"
        assert report.failing_pair == (0, 2)

    def test_complete_graph_passes_with_one_color(self, k4):
        """Test that every pair of a complete graph is adjacent."""
        report = is_total_proper_connected(k4, TotalColoring.uniform(k4))
        assert report.connected
        assert report.pairs_checked == 6

    def test_witnesses_recorded(self, c5):
        """Test that one proper witness is stored per pair."""
        c = color_cycle(5)
        report = is_total_proper_connected(c5, c)
        assert report.connected
        assert len(report.witnesses) == 10
        for u in range(5):
            for v in range(5):
                if u != v:
                    witness = report.witness_for(u, v)
                    assert witness is not None
                    assert (witness.start, witness.end) == (u, v)
                    assert is_total_proper_path(c5, c, witness)

    def test_disconnected_graph_rejected(self):
        """Test that verification needs a connected graph."""
        g = Graph(n=2)
        with pytest.raises(NotConnectedError):
            is_total_proper_connected(g, TotalColoring.uniform(g))

    def test_single_vertex(self):
        """Test that K1 is trivially connected."""
        g = Graph(n=1)
        assert is_total_proper_connected(g, TotalColoring.uniform(g)).connected

    def test_modes_differ(self, p4):
        """Test a path coloring that is pc but neither pvc nor tpc connected."""
        c = TotalColoring(host=p4, vertex_colors=(1, 1, 1, 1), edge_colors=(1, 2, 1))
        assert is_total_proper_connected(p4, c, ConnectionMode.PC).connected
        assert not is_total_proper_connected(p4, c, ConnectionMode.PVC).connected
        assert not is_total_proper_connected(p4, c, ConnectionMode.TPC).connected

    def test_path_length_cap(self, c5):
        """Test that a length cap can turn PASS into FAIL."""
        c = TotalColoring(host=c5, vertex_colors=(1, 2, 1, 1, 3), edge_colors=(3, 1, 3, 3, 2))
        assert is_total_proper_connected(c5, c, max_length=1).failing_pair == (0, 2)

    @given(data=st.data())
    @settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_matches_oracle(self, data, oracle):
        """Test verdicts against the all-simple-paths reference."""
        g = data.draw(connected_graphs(min_n=2, max_n=7))
        c = data.draw(colorings(g, k=data.draw(st.integers(2, 4))))
        mode = data.draw(st.sampled_from(list(ConnectionMode)))
        assert is_total_proper_connected(g, c, mode).connected == oracle(g, c, mode)

    @pytest.mark.slow
    def test_matches_oracle_seeded_sweep(self, oracle):
        """Test 500 seeded random instances with up to 8 vertices."""
        rng = random.Random(2024)
        for _ in range(500):
            n = rng.randint(2, 8)
            m = rng.randint(n - 1, n * (n - 1) // 2)
            g, _ = generate(make_spec("random_connected", (n, m), rng.randint(0, 10**6)))
            k = rng.randint(2, 4)
            c = TotalColoring(
                host=g,
                vertex_colors=tuple(rng.randint(1, k) for _ in range(g.n)),
                edge_colors=tuple(rng.randint(1, k) for _ in range(g.m)),
            )
            mode = rng.choice(list(ConnectionMode))
            assert is_total_proper_connected(g, c, mode).connected == oracle(g, c, mode), (g, c, mode)


class TestStrongProperty:
    """Tests for the strong property."""

    @pytest.mark.parametrize("n", range(4, 13))
    def test_cycle_colorings_have_it(self, n):
        """Test the alternating cycle colorings."""
        report = has_strong_property(cycle(n), color_cycle(n))
        assert report.holds
        assert report.pairs_checked == n * (n - 1) // 2

    def test_certificates_meet_conditions(self, c5):
        """Test the endpoint conditions on every certificate."""
        c = color_cycle(5)
        report = has_strong_property(c5, c)
        assert bool(report)
        for cert in report.certificates:
            u, v = cert.u, cert.v
            first, second = cert.first, cert.second
            assert first != second
            for p in (first, second):
                assert (p.start, p.end) == (u, v)
                assert is_total_proper_path(c5, c, p)
            a1, a2 = c.edge_color(*first.vertices[:2]), c.edge_color(*second.vertices[:2])
            b1, b2 = c.edge_color(*first.vertices[-2:]), c.edge_color(*second.vertices[-2:])
            assert len({a1, a2, c.vertex_color(u)}) == 3
            assert len({b1, b2, c.vertex_color(v)}) == 3
        assert report.certificate_for(0, 2) is not None

    def test_fails_without_two_routes(self, p4):
        """Test that a tree never has two paths between a pair."""
        c = TotalColoring(host=p4, vertex_colors=(1, 2, 3, 1), edge_colors=(3, 1, 2))
        report = has_strong_property(p4, c)
        assert not report.holds
        assert report.failing_pair is not None

    def test_selected_pairs(self, c4):
        """Test checking a subset of pairs."""
        report = has_strong_property(c4, color_cycle(4), pairs=[(2, 0), (1, 3)])
        assert report.holds
        assert report.pairs_checked == 2
        assert [(cert.u, cert.v) for cert in report.certificates] == [(0, 2), (1, 3)]

    def test_monochromatic_fails_at_first_pair(self, k4):
        """Test that equal endpoint colors rule out every certificate."""
        report = has_strong_property(k4, TotalColoring.uniform(k4))
        assert not report.holds
        assert report.failing_pair == (0, 1)
        assert report.certificates == ()


class TestVerdictInvariants:
    """Properties of the connectivity verdict across palettes and modes."""

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_palette_bijection(self, data):
        """Test that renaming colors keeps the verdict and the failing pair."""
        g = data.draw(connected_graphs(min_n=2, max_n=7))
        c = data.draw(colorings(g, k=3))
        renamed = c.recolored(data.draw(palette_permutations(3)))
        before = is_total_proper_connected(g, c)
        after = is_total_proper_connected(g, renamed)
        assert before.connected == after.connected
        assert before.failing_pair == after.failing_pair

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_tpc_pass_implies_weaker_modes(self, data):
        """Test that a tpc PASS is also a pc and a pvc PASS."""
        g = data.draw(connected_graphs(min_n=2, max_n=7))
        c = data.draw(colorings(g, k=3))
        if is_total_proper_connected(g, c).connected:
            assert is_total_proper_connected(g, c, ConnectionMode.PC).connected
            assert is_total_proper_connected(g, c, ConnectionMode.PVC).connected
