"""Exact connection numbers by exhaustive coloring search.

Colorings are enumerated over a fixed element order (vertices ascending, then
edges in lexicographic order). With symmetry breaking a color may only be used
once every smaller color has appeared earlier in the order, which divides out
palette permutations. After each assignment the search backtracks when some
vertex pair has no proper walk even if every unassigned element took a fresh
color.
"""

import logging
import multiprocessing
import random
import time
from concurrent.futures import ProcessPoolExecutor
from multiprocessing.synchronize import Event
from typing import NamedTuple

from ..errors import SolverCapError, StructureError
from ..models.coloring import ConnectionMode, PathWitness, TotalColoring
from ..models.config import SizeCap
from ..models.graph import Edge, Graph
from ..models.reports import NumberComparison, SolveResult
from .paths import ProperPathFinder, is_total_proper_path
from .structure import bfs_distances, diameter, lower_bound, require_connected, tree_bound
from .verifier import failing_pairs, is_total_proper_connected

logger = logging.getLogger(__name__)

# Elements fixed before work is handed to the process pool.
PREFIX_DEPTH = 4

# Search nodes between checks of the shared stop event.
STOP_CHECK_INTERVAL = 512

# Set in pool workers; tells running prefix searches that another one succeeded.
_stop_event: Event | None = None

Element = tuple[bool, int]  # (is_vertex, index)


def element_order(g: Graph, mode: ConnectionMode) -> list[Element]:
    """Elements whose colors matter for ``mode``, in enumeration order."""
    vertices = [(True, v) for v in range(g.n)]
    edges = [(False, e) for e in range(g.m)]
    if mode is ConnectionMode.PC:
        return edges
    if mode is ConnectionMode.PVC:
        return vertices
    return vertices + edges


class _Enumeration:
    """Depth-first search for a connected coloring with at most ``k`` colors."""

    def __init__(
        self,
        graph: Graph,
        mode: ConnectionMode,
        k: int,
        prune: bool,
        canonical: bool,
        stop: Event | None = None,
    ):
        self.graph = graph
        self.mode = mode
        self.k = k
        self.prune = prune
        self.canonical = canonical
        self.vc: list[int | None] = [1 if mode is ConnectionMode.PC else None] * graph.n
        self.ec: list[int | None] = [1 if mode is ConnectionMode.PVC else None] * graph.m
        self.order = element_order(graph, mode)
        self.finder = ProperPathFinder(graph, self.vc, self.ec, mode)
        self.tested = 0
        self.stop = stop
        self.stopped = False
        self._nodes = 0

    def assign(self, position: int, color: int | None) -> None:
        is_vertex, index = self.order[position]
        if is_vertex:
            self.vc[index] = color
        else:
            self.ec[index] = color

    def feasible(self) -> bool:
        """Every pair still has a proper walk with unassigned elements as wildcards."""
        n = self.graph.n
        for u in range(n - 1):
            _, reached = self.finder.reachable_targets(u)
            if any(v not in reached for v in range(u + 1, n)):
                return False
        return True

    def _should_stop(self) -> bool:
        self._nodes += 1
        if self.stop is not None and not self.stopped and self._nodes % STOP_CHECK_INTERVAL == 0:
            self.stopped = self.stop.is_set()
        return self.stopped

    def search(self, position: int, used: int) -> bool:
        if self._should_stop():
            return False
        if position == len(self.order):
            self.tested += 1
            return not failing_pairs(self.finder, limit=1)
        top = min(self.k, used + 1) if self.canonical else self.k
        for color in range(1, top + 1):
            self.assign(position, color)
            if self.prune and not self.feasible():
                continue
            if self.search(position + 1, max(used, color)):
                return True
            if self.stopped:
                break
        self.assign(position, None)
        return False

    def search_from(self, prefix: tuple[int, ...]) -> bool:
        for position, color in enumerate(prefix):
            self.assign(position, color)
        if self.prune and not self.feasible():
            return False
        return self.search(len(prefix), max(prefix, default=0))

    def coloring(self) -> TotalColoring:
        return TotalColoring(
            host=self.graph,
            vertex_colors=tuple(c or 1 for c in self.vc),
            edge_colors=tuple(c or 1 for c in self.ec),
        )


def canonical_prefixes(length: int, k: int, canonical: bool = True) -> list[tuple[int, ...]]:
    """All color prefixes of ``length`` elements, restricted to canonical ones when asked."""
    prefixes: list[tuple[int, ...]] = [()]
    for _ in range(length):
        grown = []
        for prefix in prefixes:
            top = min(k, max(prefix, default=0) + 1) if canonical else k
            grown.extend(prefix + (color,) for color in range(1, top + 1))
        prefixes = grown
    return prefixes


class _Task(NamedTuple):
    n: int
    edges: tuple[Edge, ...]
    mode: str
    k: int
    prune: bool
    canonical: bool
    prefix: tuple[int, ...]


def _init_worker(stop: Event | None) -> None:
    global _stop_event
    _stop_event = stop


def _search_prefix(task: _Task) -> tuple[tuple[int, ...] | None, tuple[int, ...] | None, int]:
    """Worker entry point: search one prefix subtree."""
    graph = Graph.from_edges(task.n, task.edges)
    run = _Enumeration(graph, ConnectionMode(task.mode), task.k, task.prune, task.canonical, _stop_event)
    if run.search_from(task.prefix):
        found = run.coloring()
        return found.vertex_colors, found.edge_colors, run.tested
    return None, None, run.tested


def _search_k(g: Graph, mode: ConnectionMode, k: int, cap: SizeCap) -> tuple[TotalColoring | None, int]:
    """A connected coloring with at most ``k`` colors, and the number of leaves tested."""
    depth = min(PREFIX_DEPTH, len(element_order(g, mode)))
    if cap.workers == 1 or depth == 0:
        run = _Enumeration(g, mode, k, cap.prune, cap.symmetry_breaking)
        return (run.coloring() if run.search(0, 0) else None), run.tested

    tasks = [
        _Task(g.n, g.edges, mode.value, k, cap.prune, cap.symmetry_breaking, prefix)
        for prefix in canonical_prefixes(depth, k, cap.symmetry_breaking)
    ]
    tested = 0
    context = multiprocessing.get_context()
    stop = context.Event()
    with ProcessPoolExecutor(
        max_workers=cap.workers, mp_context=context, initializer=_init_worker, initargs=(stop,)
    ) as pool:
        futures = [pool.submit(_search_prefix, task) for task in tasks]
        # Prefix order decides which certificate wins.
        for future in futures:
            vertex_colors, edge_colors, count = future.result()
            tested += count
            if vertex_colors is not None and edge_colors is not None:
                stop.set()
                pool.shutdown(wait=True, cancel_futures=True)
                return TotalColoring(host=g, vertex_colors=vertex_colors, edge_colors=edge_colors), tested
    return None, tested


def _exact(g: Graph, mode: ConnectionMode, cap: SizeCap) -> SolveResult:
    require_connected(g, f"exact {mode.value}")
    started = time.perf_counter()
    if g.is_complete:
        return SolveResult(mode=mode, value=1, certificate=TotalColoring.uniform(g))

    elements = len(element_order(g, mode))
    limit = cap.effective_max_elements
    if elements > limit:
        raise SolverCapError(
            f"exact {mode.value} is infeasible at this size: {elements} colored elements, cap {limit}"
        )

    k = 3 if mode is ConnectionMode.TPC else 2
    tested = 0
    while True:
        found, count = _search_k(g, mode, k, cap)
        tested += count
        logger.debug(f"{mode.value} with {k} colors: {'found' if found else 'none'} after {count} colorings")
        if found is not None:
            elapsed = time.perf_counter() - started
            logger.info(f"{mode.value} = {k} ({tested} colorings tested, {elapsed:.2f}s)")
            return SolveResult(
                mode=mode, value=k, certificate=found, colorings_tested=tested, elapsed_seconds=elapsed
            )
        k += 1


def exact_tpc(g: Graph, cap: SizeCap | None = None) -> SolveResult:
    """The total proper connection number with an optimal certificate."""
    return _exact(g, ConnectionMode.TPC, cap or SizeCap())


def exact_pc(g: Graph, cap: SizeCap | None = None) -> SolveResult:
    """The proper connection number; vertex colors of the certificate are all 1."""
    return _exact(g, ConnectionMode.PC, cap or SizeCap())


def exact_pvc(g: Graph) -> SolveResult:
    """The proper vertex connection number from its closed form.

    0 for complete graphs, 1 for diameter 2, otherwise 2 with vertices colored
    by the parity of their distance from vertex 0 (paths through a BFS tree
    alternate).
    """
    require_connected(g, "exact pvc")
    mode = ConnectionMode.PVC
    if g.is_complete:
        return SolveResult(mode=mode, value=0, certificate=TotalColoring.uniform(g))
    if diameter(g) == 2:
        return SolveResult(mode=mode, value=1, certificate=TotalColoring.uniform(g))
    dist = bfs_distances(g, 0)
    coloring = TotalColoring(
        host=g,
        vertex_colors=tuple((d or 0) % 2 + 1 for d in dist),
        edge_colors=(1,) * g.m,
    )
    report = is_total_proper_connected(g, coloring, mode)
    if not report.connected:
        raise StructureError(f"parity coloring fails for pair {report.failing_pair}")
    return SolveResult(mode=mode, value=2, certificate=coloring)


def exact_number(g: Graph, mode: ConnectionMode, cap: SizeCap | None = None) -> SolveResult:
    """Dispatch to the exact solver for ``mode``."""
    if mode is ConnectionMode.PVC:
        return exact_pvc(g)
    return _exact(g, mode, cap or SizeCap())


def compare_numbers(g: Graph, cap: SizeCap | None = None) -> NumberComparison:
    """tpc, pc and pvc side by side with the known lower and spanning tree bounds."""
    started = time.perf_counter()
    tpc = exact_tpc(g, cap)
    pc = exact_pc(g, cap)
    pvc = exact_pvc(g)
    bound, exact_bound = tree_bound(g)
    if tpc.value > bound:
        logger.warning(f"tpc = {tpc.value} exceeds the spanning tree bound {bound}")
    return NumberComparison(
        tpc=tpc.value,
        pc=pc.value,
        pvc=pvc.value,
        lower_bound=lower_bound(g),
        tree_bound=bound,
        tree_bound_exact=exact_bound,
        colorings_tested=tpc.colorings_tested + pc.colorings_tested,
        elapsed_seconds=time.perf_counter() - started,
    )


def sample_random_colorings(
    g: Graph,
    k: int,
    samples: int,
    seed: int = 0,
    mode: ConnectionMode = ConnectionMode.TPC,
) -> int:
    """Count how many of ``samples`` uniformly random ``k``-colorings are connected."""
    require_connected(g, "random sampling")
    rng = random.Random(seed)
    vc: list[int | None] = [1] * g.n
    ec: list[int | None] = [1] * g.m
    finder = ProperPathFinder(g, vc, ec, mode)
    passing = 0
    for _ in range(samples):
        for v in range(g.n):
            vc[v] = rng.randint(1, k)
        for e in range(g.m):
            ec[e] = rng.randint(1, k)
        if not failing_pairs(finder, limit=1):
            passing += 1
    logger.info(f"{passing} of {samples} random {k}-colorings are {mode.value} connected")
    return passing


def _forward_arc(n: int, start: int, end: int) -> list[int]:
    steps = (end - start) % n
    return [(start + i) % n for i in range(steps + 1)]


def interleaved_arcs_premise(c: TotalColoring, first: PathWitness, second: PathWitness) -> bool:
    """Whether two forward arcs of a 3-colored cycle satisfy the interleaving premise.

    The host must be the cycle ``0, 1, ..., n-1``. ``first`` runs forward from
    ``j`` around to ``i`` and ``second`` from ``l`` around to ``k`` with
    ``i < j < k < l``, ``|i - l| > 1`` and ``|k - j| > 1``; both must be total
    proper and the coloring may use at most three colors.
    """
    g = c.host
    n = g.n
    cycle = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    if n < 3 or set(g.edges) != cycle:
        raise StructureError("expected the cycle 0, 1, ..., n-1")
    if c.color_count > 3:
        return False
    j, i = first.start, first.end
    l, k = second.start, second.end  # noqa: E741
    if list(first.vertices) != _forward_arc(n, j, i) or list(second.vertices) != _forward_arc(n, l, k):
        return False
    if not (i < j < k < l and abs(i - l) > 1 and abs(k - j) > 1):
        return False
    return is_total_proper_path(g, c, first) and is_total_proper_path(g, c, second)


def interleaved_arcs_imply_period_three(c: TotalColoring, first: PathWitness, second: PathWitness) -> bool:
    """The implication "premise implies 3 divides n" evaluated on one instance."""
    return not interleaved_arcs_premise(c, first, second) or c.host.n % 3 == 0
