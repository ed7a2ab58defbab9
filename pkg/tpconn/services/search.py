"""Randomized local search for connected colorings, and the periodic phase coloring."""

import logging
import random

from ..errors import StructureError
from ..models.coloring import TotalColoring
from ..models.config import SearchBudget
from ..models.graph import Graph
from .paths import ProperPathFinder
from .structure import ear_decomposition, is_connected, is_two_connected
from .verifier import failing_pairs, is_total_proper_connected

logger = logging.getLogger(__name__)


def phase_coloring(g: Graph) -> TotalColoring | None:
    """A 3-coloring from vertex phases in Z_3, or ``None`` when the phases clash.

    Phases step by one along the base cycle and along each ear in one of its
    two directions. A vertex with phase ``p`` gets color ``p + 1`` and an edge
    gets the phase its endpoints miss. Every path following the orientation is
    total proper, and an ear decomposition orientation is strongly connected.
    """
    if not is_two_connected(g):
        return None
    decomposition = ear_decomposition(g)
    cycle = decomposition.base_cycle
    if len(cycle) % 3:
        return None

    phase: dict[int, int] = {v: i % 3 for i, v in enumerate(cycle)}
    for ear in decomposition.ears:
        length = ear.length
        if (phase[ear.v] - phase[ear.u]) % 3 == length % 3:
            for i, x in enumerate(ear.internal, start=1):
                phase[x] = (phase[ear.u] + i) % 3
        elif (phase[ear.u] - phase[ear.v]) % 3 == length % 3:
            for i, x in enumerate(reversed(ear.internal), start=1):
                phase[x] = (phase[ear.v] + i) % 3
        else:
            logger.debug(f"Ear {ear.path} has no orientation compatible with the phases")
            return None

    return TotalColoring(
        host=g,
        vertex_colors=tuple(phase[v] + 1 for v in range(g.n)),
        edge_colors=tuple(3 - phase[u] - phase[v] + 1 for u, v in g.edges),
    )


def _neighborhood_elements(g: Graph, u: int, v: int) -> list[tuple[bool, int]]:
    """Vertices and edges within one step of a failing pair."""
    around = {u, v} | set(g.adjacency[u]) | set(g.adjacency[v])
    elements: set[tuple[bool, int]] = set()
    for x in around:
        elements.add((True, x))
        elements.update((False, eid) for _, eid in g.incidence[x])
    return sorted(elements)


def _best_move(
    finder: ProperPathFinder, vc: list[int | None], ec: list[int | None], k: int
) -> tuple[bool, int, int] | None:
    """The single recoloring over all elements that leaves the fewest failing pairs."""
    best: tuple[int, bool, int, int] | None = None
    for is_vertex, colors in ((True, vc), (False, ec)):
        for index, old in enumerate(colors):
            for color in range(1, k + 1):
                if color == old:
                    continue
                colors[index] = color
                count = len(failing_pairs(finder))
                colors[index] = old
                if best is None or count < best[0]:
                    best = (count, is_vertex, index, color)
    return None if best is None else best[1:]


def search_coloring(
    g: Graph,
    k: int,
    budget: SearchBudget | None = None,
    start: TotalColoring | None = None,
) -> TotalColoring | None:
    """Look for a verified total proper connected coloring with at most ``k`` colors.

    Each restart starts from a random coloring. The first starts from
    ``start`` when given, else from the phase coloring when available. A move
    recolors one element next to a failing pair, or with ``budget.full_scan``
    the element and color leaving the fewest failing pairs. Improving and
    sideways moves are kept; a restart ends after ``plateau`` moves without
    improvement. ``None`` means the budget ran out, not that no coloring exists.
    """
    if k < 1:
        raise StructureError(f"k must be positive, got {k}")
    if start is not None:
        if start.host != g:
            raise StructureError("start coloring belongs to a different graph")
        if start.palette and start.palette[-1] > k:
            raise StructureError(f"start coloring uses colors above {k}")
    budget = budget or SearchBudget()
    if g.n == 0 or not is_connected(g):
        logger.info("Local search skipped: graph is not connected")
        return None

    iterations = 0
    for restart in range(budget.restarts):
        rng = random.Random(budget.seed * 1_000_003 + restart)
        initial = None
        if restart == 0:
            initial = start
            if initial is None and budget.phase_seed and k >= 3:
                initial = phase_coloring(g)
        if initial is not None:
            vc: list[int | None] = list(initial.vertex_colors)
            ec: list[int | None] = list(initial.edge_colors)
        else:
            vc = [rng.randint(1, k) for _ in range(g.n)]
            ec = [rng.randint(1, k) for _ in range(g.m)]
        finder = ProperPathFinder(g, vc, ec)
        failures = failing_pairs(finder)
        stall = 0

        while failures and stall <= budget.plateau and iterations < budget.max_iterations:
            iterations += 1
            if budget.full_scan:
                move = _best_move(finder, vc, ec, k)
                if move is None:
                    break
                is_vertex, index, new = move
            else:
                u, v = rng.choice(failures)
                is_vertex, index = rng.choice(_neighborhood_elements(g, u, v))
                options = [c for c in range(1, k + 1) if c != (vc if is_vertex else ec)[index]]
                if not options:
                    break
                new = rng.choice(options)
            colors = vc if is_vertex else ec
            old = colors[index]
            colors[index] = new
            trial = failing_pairs(finder)
            if len(trial) < len(failures):
                failures, stall = trial, 0
            elif len(trial) == len(failures):
                failures, stall = trial, stall + 1
            else:
                colors[index] = old
                stall += 1

        if not failures:
            coloring = TotalColoring(
                host=g,
                vertex_colors=tuple(c or 1 for c in vc),
                edge_colors=tuple(c or 1 for c in ec),
            )
            if is_total_proper_connected(g, coloring).connected:
                logger.info(f"Found a {k}-coloring on restart {restart} after {iterations} moves")
                return coloring
            logger.error("Local search produced a coloring the verifier rejects")
        logger.debug(f"Restart {restart} ended with {len(failures)} failing pairs")
        if iterations >= budget.max_iterations:
            break

    logger.info(f"No {k}-coloring found within {iterations} moves")
    return None
