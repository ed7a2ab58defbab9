"""Tests for the command line front end."""

import io

import pytest
from rich.console import Console

import tpconn.__main__ as main
from tests.conftest import cycle
from tpconn.__main__ import EXIT_ERROR, EXIT_FAIL, EXIT_OK, run, write_report
from tpconn.models.coloring import TotalColoring
from tpconn.services.formats import parse_coloring, parse_graph, serialize_coloring, serialize_graph


@pytest.fixture
def cli(temp_dir, monkeypatch):
    """Run ``tpconn`` in a scratch directory without cache or log file; returns (status, output)."""
    monkeypatch.chdir(temp_dir)

    def invoke(*argv: str) -> tuple[int, str]:
        console = Console(file=io.StringIO(), width=200, color_system=None)
        status = run([*argv, "--no-cache", "--log-file", ""], console)
        return status, console.file.getvalue()

    return invoke


@pytest.fixture
def c5_file(temp_dir):
    path = temp_dir / "c5.graph"
    path.write_text(serialize_graph(cycle(5)))
    return path


class TestGen:
    """Tests for ``tpconn gen``."""

    def test_to_file(self, cli, temp_dir):
        """Test writing a family graph and printing its size."""
        status, out = cli("gen", "--family", "prop4", "--params", "1", "-o", "p.graph")
        assert status == EXIT_OK
        assert "n=24 m=27" in out
        assert "# landmark w2 6" in (temp_dir / "p.graph").read_text()

    def test_to_stdout(self, cli):
        """Test printing the graph when no output is given."""
        status, out = cli("gen", "--family", "cycle", "--params", "4")
        assert status == EXIT_OK
        assert parse_graph(out) == cycle(4)

    @pytest.mark.parametrize(
        "argv",
        [
            ("--family", "wheel", "--params", "5"),
            ("--family", "cycle", "--params", "5", "--seed", "2"),
            ("--family", "cycle", "--params", "five"),
        ],
    )
    def test_bad_requests(self, cli, argv):
        """Test unknown families, misplaced seeds and malformed parameters."""
        status, out = cli("gen", *argv)
        assert status == EXIT_ERROR
        assert "error:" in out


class TestColorAndVerify:
    """Tests for ``tpconn color`` and ``tpconn verify``."""

    def test_color_then_verify(self, cli, temp_dir, c5_file):
        """Test the cycle construction followed by verification."""
        status, out = cli("color", "--method", "cycle", "-g", str(c5_file), "-o", "c5.col")
        assert status == EXIT_OK
        assert "colors: 4" in out

        status, out = cli("verify", "-g", str(c5_file), "-c", "c5.col", "--strong", "--report", "r.txt")
        assert status == EXIT_OK
        assert "PASS (10 pairs)" in out
        assert "strong property: PASS" in out
        report = (temp_dir / "r.txt").read_text().splitlines()
        assert report[0] == "command=verify"
        assert "verdict=PASS" in report
        assert "strong=PASS" in report

    def test_color_to_stdout(self, cli, c5_file):
        """Test that the coloring and its color count are printed."""
        status, out = cli("color", "--method", "two_connected", "-g", str(c5_file))
        assert status == EXIT_OK
        assert out.startswith("v 0 ")
        assert "# colors: " in out

    def test_verify_fail(self, cli, temp_dir):
        """Test a failing verdict with its pair and exit status 1."""
        graph = temp_dir / "c4.graph"
        graph.write_text(serialize_graph(cycle(4)))
        (temp_dir / "flat.col").write_text(serialize_coloring(TotalColoring.uniform(cycle(4))))
        status, out = cli("verify", "-g", str(graph), "-c", "flat.col", "--report", "r.txt")
        assert status == EXIT_FAIL
        assert "FAIL: no tpc path between 0 and 2" in out
        assert "failing_pair=0,2" in (temp_dir / "r.txt").read_text()

    def test_verify_pc_mode(self, cli, temp_dir):
        """Test verification of an edge-only coloring."""
        graph = temp_dir / "c4.graph"
        graph.write_text(serialize_graph(cycle(4)))
        (temp_dir / "pc.col").write_text(
            "v 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1 1\ne 1 2 2\ne 2 3 1\ne 0 3 2\n"
        )
        status, out = cli("verify", "-g", str(graph), "-c", "pc.col", "--mode", "pc")
        assert status == EXIT_OK
        assert "PASS" in out

    def test_strong_needs_tpc(self, cli, c5_file, temp_dir):
        """Test that --strong is refused for other modes."""
        (temp_dir / "x.col").write_text("")
        status, out = cli("verify", "-g", str(c5_file), "-c", "x.col", "--mode", "pc", "--strong")
        assert status == EXIT_ERROR
        assert "--strong" in out

    def test_construction_shape_error(self, cli, c5_file):
        """Test that a construction on the wrong graph exits with 2."""
        status, out = cli("color", "--method", "tree", "-g", str(c5_file))
        assert status == EXIT_ERROR
        assert "tree" in out

    def test_unknown_method(self, cli, c5_file):
        """Test an unknown construction name."""
        status, _ = cli("color", "--method", "magic", "-g", str(c5_file))
        assert status == EXIT_ERROR

    def test_missing_graph_file(self, cli):
        """Test that unreadable input exits with 2."""
        status, out = cli("profile", "-g", "nowhere.graph")
        assert status == EXIT_ERROR
        assert "nowhere.graph" in out

    def test_malformed_coloring(self, cli, c5_file, temp_dir):
        """Test that coloring format errors exit with 2."""
        (temp_dir / "bad.col").write_text("v 0 1\n")
        status, out = cli("verify", "-g", str(c5_file), "-c", "bad.col")
        assert status == EXIT_ERROR
        assert "uncolored" in out


class TestSolveAndCompare:
    """Tests for the exact solver commands."""

    def test_solve(self, cli, temp_dir, c5_file):
        """Test the exact tpc and its certificate file."""
        status, out = cli("solve", "-g", str(c5_file), "--number", "tpc", "-o", "best.col")
        assert status == EXIT_OK
        assert out.splitlines()[0] == "3"
        certificate = parse_coloring((temp_dir / "best.col").read_text(), cycle(5))
        assert certificate.color_count == 3

    def test_solve_pvc(self, cli, c5_file):
        """Test the closed-form number."""
        status, out = cli("solve", "-g", str(c5_file), "--number", "pvc")
        assert status == EXIT_OK
        assert out.strip() == "1"

    def test_size_cap(self, cli, c5_file):
        """Test that exceeding --cap exits with 2."""
        status, out = cli("solve", "-g", str(c5_file), "--cap", "4")
        assert status == EXIT_ERROR
        assert "infeasible" in out

    def test_compare(self, cli, temp_dir, c5_file):
        """Test the three numbers and their gaps."""
        status, out = cli("compare", "-g", str(c5_file), "--report", "cmp.txt")
        assert status == EXIT_OK
        for line in ("tpc = 3", "pc = 2", "pvc = 1", "tpc_minus_pc = 1", "tpc_minus_pvc = 2"):
            assert line in out
        assert "tree_bound=3" in (temp_dir / "cmp.txt").read_text()

    def test_profile(self, cli, temp_dir):
        """Test structural statistics of a path."""
        graph = temp_dir / "p.graph"
        graph.write_text("4 3\n0 1\n1 2\n2 3\n")
        status, out = cli("profile", "-g", str(graph))
        assert status == EXIT_OK
        assert "b = 3" in out
        assert "bridge_max_degree = 2" in out
        assert "lower_bound = 4" in out


class TestCaching:
    """Tests for cached solver results."""

    def test_results_are_cached(self, temp_dir, monkeypatch, c5_file):
        """Test that a second solve is served from the cache directory."""
        monkeypatch.chdir(temp_dir)
        console = Console(file=io.StringIO(), width=200, color_system=None)
        argv = ["solve", "-g", str(c5_file), "--cache-dir", "cache", "--log-file", ""]
        assert run(argv, console) == EXIT_OK
        assert list((temp_dir / "cache").glob("tpc_*.json"))
        assert run(argv, console) == EXIT_OK
        assert console.file.getvalue().splitlines() == ["3", "3"]

    def test_refresh_and_clear(self, temp_dir, monkeypatch, c5_file):
        """Test that --refresh recomputes one result and --clear-cache empties the directory."""
        monkeypatch.chdir(temp_dir)
        calls = []
        solve = main.exact_number

        def counted(*args):
            calls.append(args[1])
            return solve(*args)

        monkeypatch.setattr(main, "exact_number", counted)
        console = Console(file=io.StringIO(), width=200, color_system=None)
        argv = ["solve", "-g", str(c5_file), "--cache-dir", "cache", "--log-file", ""]
        assert run(argv, console) == EXIT_OK
        assert run(argv, console) == EXIT_OK
        assert len(calls) == 1
        assert run([*argv, "--refresh"], console) == EXIT_OK
        assert len(calls) == 2

        (temp_dir / "cache" / "pc_16_other.json").write_text("{}")
        assert run([*argv, "--clear-cache"], console) == EXIT_OK
        assert len(calls) == 3
        assert not (temp_dir / "cache" / "pc_16_other.json").exists()
        assert len(list((temp_dir / "cache").glob("tpc_*.json"))) == 1
        assert console.file.getvalue().splitlines() == ["3"] * 4


class TestConfigHandling:
    """Tests for configuration files and global flags."""

    def test_invalid_config(self, cli, temp_dir, c5_file):
        """Test that a malformed configuration exits with 2."""
        (temp_dir / "config.json").write_text('{"solver": {"max_elements": 0}}')
        status, out = cli("profile", "-g", str(c5_file))
        assert status == EXIT_ERROR
        assert "invalid configuration" in out

    def test_config_file_is_used(self, cli, temp_dir, c5_file):
        """Test that solver limits come from the configuration file."""
        (temp_dir / "config.json").write_text('{"solver": {"max_elements": 5}}')
        status, out = cli("solve", "-g", str(c5_file))
        assert status == EXIT_ERROR
        assert "cap 5" in out

    def test_version(self, capsys):
        """Test the version flag."""
        with pytest.raises(SystemExit) as exc:
            run(["--version"])
        assert exc.value.code == 0
        assert "tpconn" in capsys.readouterr().out

    def test_write_report(self, temp_dir):
        """Test the key=value report format."""
        path = temp_dir / "out" / "r.txt"
        write_report(path, {"command": "solve", "value": 3, "failing_pair": None})
        assert path.read_text() == "command=solve\nvalue=3\nfailing_pair=\n"
