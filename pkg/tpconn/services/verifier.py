"""Connectivity verdicts for colored graphs and the strong property."""

import logging
from collections.abc import Iterable

from ..errors import StructureError
from ..models.coloring import ConnectionMode, PathWitness, TotalColoring
from ..models.graph import Graph, normalize_edge
from ..models.reports import (
    Pair,
    StrongCertificate,
    StrongPropertyReport,
    VerificationReport,
)
from .paths import ArcFilter, ProperPathFinder
from .structure import require_connected

logger = logging.getLogger(__name__)


def _check_host(g: Graph, c: TotalColoring) -> None:
    if c.host != g:
        raise StructureError("the coloring belongs to a different graph")


def exists_total_proper_path(
    g: Graph,
    c: TotalColoring,
    u: int,
    v: int,
    *,
    mode: ConnectionMode = ConnectionMode.TPC,
    max_length: int | None = None,
) -> PathWitness | None:
    """A proper ``u``-``v`` path under ``mode`` if one exists."""
    _check_host(g, c)
    if u == v:
        raise StructureError("a path needs two distinct endpoints")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise StructureError(f"vertices must lie in 0..{g.n - 1}")
    path = ProperPathFinder.for_coloring(c, mode, max_length).find_path(u, v)
    return None if path is None else PathWitness.of(path)


def failing_pairs(finder: ProperPathFinder, limit: int | None = None) -> list[Pair]:
    """Vertex pairs without a proper path, in lexicographic order."""
    n = finder.graph.n
    failures: list[Pair] = []
    for u in range(n - 1):
        parent, reached = finder.reachable_targets(u)
        for v in range(u + 1, n):
            if v not in reached or finder.witness_from_search(u, v, parent) is None:
                failures.append((u, v))
                if limit is not None and len(failures) >= limit:
                    return failures
    return failures


def is_total_proper_connected(
    g: Graph,
    c: TotalColoring,
    mode: ConnectionMode = ConnectionMode.TPC,
    *,
    max_length: int | None = None,
) -> VerificationReport:
    """Check every unordered pair; stops at the first pair without a path."""
    _check_host(g, c)
    require_connected(g, "verification")
    finder = ProperPathFinder.for_coloring(c, mode, max_length)
    witnesses: list[PathWitness] = []
    checked = 0
    for u in range(g.n - 1):
        parent, reached = finder.reachable_targets(u)
        for v in range(u + 1, g.n):
            checked += 1
            path = finder.witness_from_search(u, v, parent) if v in reached else None
            if path is None:
                logger.debug(f"No {mode.value} path between {u} and {v}")
                return VerificationReport(
                    mode=mode,
                    connected=False,
                    witnesses=tuple(witnesses),
                    failing_pair=(u, v),
                    pairs_checked=checked,
                )
            witnesses.append(PathWitness.of(path))
    return VerificationReport(mode=mode, connected=True, witnesses=tuple(witnesses), pairs_checked=checked)


def _first_arc_filter(finder: ProperPathFinder, u: int, v: int, color: int) -> ArcFilter:
    cu = finder.vc[u]

    def accept(arc: int) -> bool:
        head = finder.heads[arc]
        return finder.ec[arc >> 1] == color and head != v and finder.vc[head] != cu

    return accept


def _last_arc_filter(finder: ProperPathFinder, u: int, v: int, color: int) -> ArcFilter:
    cv = finder.vc[v]

    def accept(arc: int) -> bool:
        tail = finder.tails[arc]
        return finder.ec[arc >> 1] == color and tail != u and finder.vc[tail] != cv

    return accept


def strong_pair_paths(finder: ProperPathFinder, u: int, v: int) -> tuple[list[int], list[int]] | None:
    """Two total proper ``u``-``v`` paths meeting the strong-property conditions.

    Paths are grouped by (first edge color, last edge color); two groups with
    different first colors and different last colors give two distinct paths.
    """
    g, vc, ec = finder.graph, finder.vc, finder.ec
    cu, cv = vc[u], vc[v]
    found: list[tuple[int | None, int | None, list[int]]] = []

    def compatible(a: int | None, b: int | None) -> list[int] | None:
        for a2, b2, path in found:
            if a2 != a and b2 != b:
                return path
        return None

    if g.has_edge(u, v):
        e = ec[g.edge_id(u, v)]
        if cu != cv and e not in (cu, cv):
            found.append((e, e, [u, v]))

    first_colors = sorted(
        {
            ec[a >> 1]
            for a in finder.out_arcs[u]
            if finder.heads[a] != v and ec[a >> 1] != cu and vc[finder.heads[a]] != cu
        },
        key=lambda x: (x is None, x),
    )
    last_colors = sorted(
        {
            ec[a >> 1]
            for a in finder.out_arcs[v]
            if finder.heads[a] != u and ec[a >> 1] != cv and vc[finder.heads[a]] != cv
        },
        key=lambda x: (x is None, x),
    )
    for a_color in first_colors:
        for b_color in last_colors:
            if a_color is None or b_color is None:
                continue
            path = finder.find_path(
                u,
                v,
                first=_first_arc_filter(finder, u, v, a_color),
                last=_last_arc_filter(finder, u, v, b_color),
            )
            if path is None:
                continue
            partner = compatible(a_color, b_color)
            if partner is not None:
                return partner, path
            found.append((a_color, b_color, path))
    return None


def first_strong_failure(finder: ProperPathFinder, pairs: Iterable[Pair]) -> Pair | None:
    """The first pair in ``pairs`` lacking a strong-property certificate."""
    for u, v in pairs:
        if strong_pair_paths(finder, u, v) is None:
            return (u, v)
    return None


def has_strong_property(
    g: Graph,
    c: TotalColoring,
    *,
    pairs: Iterable[Pair] | None = None,
    max_length: int | None = None,
) -> StrongPropertyReport:
    """Check the strong property on every pair (or on ``pairs`` only).

    For each pair ``u, v`` two total proper paths must exist whose first
    internal vertex avoids ``c(u)``, whose last internal vertex avoids
    ``c(v)``, and whose first edges together with ``c(u)`` (and last edges
    together with ``c(v)``) use three distinct colors.
    """
    _check_host(g, c)
    require_connected(g, "strong property check")
    if pairs is None:
        selected = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    else:
        selected = sorted({normalize_edge(u, v) for u, v in pairs if u != v})

    finder = ProperPathFinder.for_coloring(c, ConnectionMode.TPC, max_length)
    certificates: list[StrongCertificate] = []
    for checked, (u, v) in enumerate(selected, start=1):
        found = strong_pair_paths(finder, u, v)
        if found is None:
            logger.debug(f"Strong property fails for pair ({u}, {v})")
            return StrongPropertyReport(
                holds=False,
                certificates=tuple(certificates),
                failing_pair=(u, v),
                pairs_checked=checked,
            )
        certificates.append(
            StrongCertificate(u=u, v=v, first=PathWitness.of(found[0]), second=PathWitness.of(found[1]))
        )
    return StrongPropertyReport(holds=True, certificates=tuple(certificates), pairs_checked=len(selected))
