"""Command line front end: ``tpconn <command> [options]``."""

import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from . import __version__
from .errors import FamilyParameterError, TpconnError
from .models.coloring import ConnectionMode
from .models.config import CliCommand, CliConfig, Config
from .models.graph import Graph
from .models.reports import NumberComparison, SolveResult
from .services.cache import Cache, result_key
from .services.constructors import construct
from .services.families import generate, make_spec
from .services.formats import parse_coloring, parse_graph, serialize_coloring, serialize_graph
from .services.solver import compare_numbers, exact_number
from .services.structure import lower_bound, structure_profile, tree_bound
from .services.verifier import has_strong_property, is_total_proper_connected

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

ReportValue = int | float | str | None


def setup_logging(log_level: str = "INFO", log_file: str | None = None) -> None:
    """Configure stderr logging plus an optional rotating log file.

    Args:
        log_level: The logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Path of the rotating log file, or None for stderr only
    """
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if log_file:
        try:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            # Rotate at 10MB, keep 5 backup files
            handlers.append(
                RotatingFileHandler(path, maxBytes=10 * 1024 * 1024, backupCount=5, encoding="utf-8")
            )
        except OSError:
            pass  # Skip file logging if we can't write

    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(token) for token in text.split(",") if token.strip())
    except ValueError:
        raise FamilyParameterError(f"--params expects comma-separated integers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=Path("config.json"), help="Configuration file (default: config.json)")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    common.add_argument("--log-file", help="Rotating log file; an empty value disables file logging")
    common.add_argument("--report", type=Path, help="Write a key=value summary to this file")
    common.add_argument("--cache-dir", type=Path, help="Directory for cached exact results")
    common.add_argument("--no-cache", action="store_true", help="Do not read or write cached results")
    common.add_argument("--refresh", action="store_true", help="Recompute and replace cached results for this graph")
    common.add_argument("--clear-cache", action="store_true", help="Delete every cached result before running")
    common.add_argument("--workers", type=int, help="Worker processes for the exact solver")
    common.add_argument("--cap", type=int, help="Largest number of colored elements the exact solver accepts")
    common.add_argument("--seed", type=int, help="Seed for random families and repair loops")

    parser = argparse.ArgumentParser(
        prog="tpconn",
        description="Total proper connection: generate graphs, build and verify colorings, compute exact numbers",
    )
    parser.add_argument("-V", "--version", action="version", version=f"tpconn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="Write a graph from a named family")
    gen.add_argument("--family", required=True, help="Family name, e.g. cycle or prop3")
    gen.add_argument("--params", default="", help="Comma-separated integer parameters")
    gen.add_argument("-o", "--output", type=Path, help="Graph file to write (default: stdout)")

    color = sub.add_parser("color", parents=[common], help="Color a graph with a named construction")
    color.add_argument("--method", required=True, help="Construction name, e.g. tree or two_connected")
    color.add_argument("-g", "--graph", type=Path, required=True)
    color.add_argument("-o", "--output", type=Path, help="Coloring file to write (default: stdout)")

    verify = sub.add_parser("verify", parents=[common], help="Check a coloring for proper connection")
    verify.add_argument("-g", "--graph", type=Path, required=True)
    verify.add_argument("-c", "--coloring", type=Path, required=True)
    verify.add_argument("--mode", default="tpc", help="tpc, pc or pvc")
    verify.add_argument("--strong", action="store_true", help="Also check the strong property")

    solve = sub.add_parser("solve", parents=[common], help="Compute an exact connection number")
    solve.add_argument("-g", "--graph", type=Path, required=True)
    solve.add_argument("--number", default="tpc", help="tpc, pc or pvc")
    solve.add_argument("-o", "--output", type=Path, help="Write the optimal certificate here")

    compare = sub.add_parser("compare", parents=[common], help="Compare tpc, pc and pvc")
    compare.add_argument("-g", "--graph", type=Path, required=True)

    profile = sub.add_parser("profile", parents=[common], help="Print structural statistics")
    profile.add_argument("-g", "--graph", type=Path, required=True)

    return parser


def _cli_config(args: argparse.Namespace) -> CliConfig:
    command = CliCommand(args.command)
    mode = getattr(args, "number", None) or getattr(args, "mode", None) or ConnectionMode.TPC.value
    return CliConfig(
        command=command,
        graph_path=getattr(args, "graph", None),
        coloring_path=getattr(args, "coloring", None),
        output_path=getattr(args, "output", None),
        report_path=args.report,
        family=getattr(args, "family", None),
        params=_int_list(getattr(args, "params", "") or ""),
        seed=args.seed,
        method=getattr(args, "method", None),
        mode=mode,
        strong=getattr(args, "strong", False),
        cap=args.cap,
        workers=args.workers,
        cache_dir=args.cache_dir,
        no_cache=args.no_cache,
        refresh=args.refresh,
        clear_cache=args.clear_cache,
        log_file=args.log_file,
        verbose=args.verbose,
    )


class Runner:
    """Executes one validated command and collects its report fields."""

    def __init__(self, cli: CliConfig, config: Config, console: Console):
        self.cli = cli
        self.config = config
        self.console = console
        self.report: dict[str, ReportValue] = {"command": cli.command.value}

    def _graph(self) -> Graph:
        assert self.cli.graph_path is not None
        return parse_graph(self.cli.graph_path.read_text())

    def _emit(self, text: str, path: Path | None, what: str) -> None:
        if path is None:
            self.console.print(text, end="", markup=False, highlight=False)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            logger.info(f"Wrote {what} to {path}")

    def _cache(self) -> Cache | None:
        cache = Cache.from_settings(self.config.cache)
        if cache is not None and self.cli.clear_cache:
            cache.clear_all()
            logger.info(f"Cleared cached results in {cache.cache_dir}")
        return cache

    def _cached(self, cache: Cache | None, key: str) -> dict[str, Any] | None:
        if cache is None:
            return None
        if self.cli.refresh:
            cache.clear(key)
            return None
        return cache.get(key)

    def gen(self) -> int:
        assert self.cli.family is not None
        spec = make_spec(self.cli.family, self.cli.params, self.cli.seed)
        graph, landmarks = generate(spec)
        self._emit(serialize_graph(graph, landmarks), self.cli.output_path, "graph")
        self.report.update(family=spec.kind.value, n=graph.n, m=graph.m)
        if self.cli.output_path is not None:
            self.console.print(f"{spec.kind.value}: n={graph.n} m={graph.m}")
        return EXIT_OK

    def color(self) -> int:
        assert self.cli.method is not None
        graph = self._graph()
        coloring = construct(self.cli.method, graph, self.config.constructors)
        text = serialize_coloring(coloring)
        if self.cli.output_path is None:
            self._emit(text, None, "coloring")
            self.console.print(f"# colors: {coloring.color_count}", highlight=False)
        else:
            self._emit(text, self.cli.output_path, "coloring")
            self.console.print(f"colors: {coloring.color_count}", highlight=False)
        self.report.update(method=self.cli.method.value, colors=coloring.color_count)
        return EXIT_OK

    def verify(self) -> int:
        assert self.cli.coloring_path is not None
        graph = self._graph()
        coloring = parse_coloring(self.cli.coloring_path.read_text(), graph)
        max_length = self.config.verifier.max_path_length
        report = is_total_proper_connected(graph, coloring, self.cli.mode, max_length=max_length)
        self.report.update(mode=self.cli.mode.value, colors=coloring.mode_color_count(self.cli.mode))
        self.report["verdict"] = report.verdict
        if report.failing_pair is not None:
            u, v = report.failing_pair
            self.console.print(f"[red]FAIL[/red]: no {self.cli.mode.value} path between {u} and {v}")
            self.report["failing_pair"] = f"{u},{v}"
            return EXIT_FAIL
        self.console.print(f"[green]PASS[/green] ({report.pairs_checked} pairs)")

        if self.cli.strong:
            strong = has_strong_property(graph, coloring, max_length=max_length)
            self.report["strong"] = "PASS" if strong.holds else "FAIL"
            if strong.failing_pair is not None:
                u, v = strong.failing_pair
                self.console.print(f"strong property: [red]FAIL[/red] at pair {u} {v}")
                self.report["strong_failing_pair"] = f"{u},{v}"
                return EXIT_FAIL
            self.console.print("strong property: [green]PASS[/green]")
        return EXIT_OK

    def _solve(self, graph: Graph, mode: ConnectionMode) -> SolveResult:
        cache = self._cache()
        key = result_key(graph, mode.value, self.config.solver.effective_max_elements)
        cached = self._cached(cache, key)
        if cached is not None:
            try:
                return SolveResult.model_validate(cached)
            except ValidationError as e:
                logger.warning(f"Discarding cached result {key}: {e.error_count()} errors")
        result = exact_number(graph, mode, self.config.solver)
        if cache:
            cache.set(key, result.model_dump(mode="json"))
        return result

    def solve(self) -> int:
        graph = self._graph()
        mode = self.cli.mode
        result = self._solve(graph, mode)
        self.console.print(str(result.value), highlight=False)
        if self.cli.output_path is not None:
            self._emit(serialize_coloring(result.certificate), self.cli.output_path, "certificate")
        self.report.update(
            number=mode.value,
            value=result.value,
            colorings_tested=result.colorings_tested,
            elapsed_seconds=round(result.elapsed_seconds, 3),
        )
        return EXIT_OK

    def compare(self) -> int:
        graph = self._graph()
        cache = self._cache()
        key = result_key(graph, "compare", self.config.solver.effective_max_elements)
        cached = self._cached(cache, key)
        comparison: NumberComparison | None = None
        if cached is not None:
            try:
                comparison = NumberComparison.model_validate(cached)
            except ValidationError as e:
                logger.warning(f"Discarding cached comparison {key}: {e.error_count()} errors")
        if comparison is None:
            comparison = compare_numbers(graph, self.config.solver)
            if cache:
                cache.set(key, comparison.model_dump(mode="json"))

        flat = comparison.as_report()
        for name, value in flat.items():
            self.console.print(f"{name} = {value}", highlight=False)
        self.report.update(flat)
        return EXIT_OK

    def profile(self) -> int:
        graph = self._graph()
        stats = structure_profile(graph)
        rows: dict[str, ReportValue] = {
            "n": stats.n,
            "m": stats.m,
            "max_degree": stats.max_degree,
            "min_degree": stats.min_degree,
            "connected": str(stats.connected).lower(),
            "b": stats.b,
            "bridge_max_degree": stats.bridge_max_degree,
            "diameter": stats.diameter_display,
            "bridges": " ".join(f"{u}-{v}" for u, v in stats.bridges),
        }
        if stats.connected and graph.n > 1:
            bound, exact = tree_bound(graph)
            rows.update(lower_bound=lower_bound(graph), tree_bound=bound, tree_bound_exact=str(exact).lower())
        for name, value in rows.items():
            self.console.print(f"{name} = {value}", highlight=False, markup=False)
        self.report.update(rows)
        return EXIT_OK

    def run(self) -> int:
        handlers = {
            CliCommand.GEN: self.gen,
            CliCommand.COLOR: self.color,
            CliCommand.VERIFY: self.verify,
            CliCommand.SOLVE: self.solve,
            CliCommand.COMPARE: self.compare,
            CliCommand.PROFILE: self.profile,
        }
        status = handlers[self.cli.command]()
        if self.cli.report_path is not None:
            write_report(self.cli.report_path, self.report)
        return status


def write_report(path: Path, values: dict[str, ReportValue]) -> None:
    """Flat ``key=value`` lines, one per field, in insertion order."""
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{key}={'' if value is None else value}" for key, value in values.items()]
    path.write_text("\n".join(lines) + "\n")


def run(argv: list[str] | None = None, console: Console | None = None) -> int:
    """Parse ``argv``, run the command and return the exit status."""
    console = console or Console(soft_wrap=True)
    args = build_parser().parse_args(argv)

    try:
        cli = _cli_config(args)
    except (ValidationError, TpconnError) as e:
        message = e.errors()[0]["msg"] if isinstance(e, ValidationError) else str(e)
        console.print(f"[red]error:[/red] {escape(message)}", highlight=False)
        return EXIT_ERROR

    config_path: Path = args.config
    try:
        base = Config.load(config_path)
    except FileNotFoundError:
        base = Config()
    except (ValidationError, ValueError, OSError) as e:
        console.print(f"[red]error:[/red] invalid configuration {config_path}: {escape(str(e))}", highlight=False)
        return EXIT_ERROR
    config = cli.apply_to(base)
    setup_logging(config.settings.log_level, config.settings.log_file)
    logger.debug(f"Running {cli.command.value} with {config_path if config_path.exists() else 'default configuration'}")

    try:
        return Runner(cli, config, console).run()
    except (TpconnError, ValidationError, OSError) as e:
        logger.error(f"{cli.command.value} failed: {e}")
        console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_ERROR


def main() -> None:
    """Main entry point."""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        logger.info("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    main()
