"""Total proper paths: the path predicate, endpoint color accessors and the path search.

``ProperPathFinder`` works on raw color arrays so the solver can leave
elements unassigned (``None``); an unassigned color differs from every color.

The search runs a breadth-first search over arcs (directed edges): whether an
arc may follow another depends only on the two arcs and on whether the path
started at the first arc's tail, so arc reachability decides whether a total
proper *walk* exists. No walk means no path. When the walk found is simple it
is the witness; otherwise an exact depth-first search over simple paths
takes over, pruned by the same arc search restricted to unused vertices.
"""

from collections import deque
from collections.abc import Callable, Sequence
from typing import NamedTuple

from ..errors import PathError
from ..models.coloring import ConnectionMode, PathWitness, TotalColoring
from ..models.graph import Graph

Color = int | None
ArcFilter = Callable[[int], bool]


class EndColors(NamedTuple):
    """First/last edge colors and first/last internal vertex colors of a path."""

    start_e: int
    end_e: int
    start_v: int
    end_v: int


def check_path(g: Graph, p: PathWitness) -> None:
    """Raise ``PathError`` unless ``p`` is a path of ``g``."""
    for v in p.vertices:
        if not 0 <= v < g.n:
            raise PathError(f"vertex {v} is not in the graph")
    for a, b in zip(p.vertices, p.vertices[1:], strict=False):
        if not g.has_edge(a, b):
            raise PathError(f"{a} and {b} are not adjacent")


def is_proper_path(g: Graph, c: TotalColoring, p: PathWitness, mode: ConnectionMode) -> bool:
    """Path conditions for ``mode``; endpoint vertex colors are never constrained."""
    check_path(g, p)
    vs = p.vertices
    if len(vs) <= 2:
        return True
    edge_colors = [c.edge_color(a, b) for a, b in zip(vs, vs[1:], strict=False)]
    for i in range(1, len(vs) - 1):
        before, after = edge_colors[i - 1], edge_colors[i]
        if mode is not ConnectionMode.PVC and before == after:
            return False
        if mode is ConnectionMode.TPC and c.vertex_colors[vs[i]] in (before, after):
            return False
        if mode is not ConnectionMode.PC and i + 1 < len(vs) - 1:
            if c.vertex_colors[vs[i]] == c.vertex_colors[vs[i + 1]]:
                return False
    return True


def is_total_proper_path(g: Graph, c: TotalColoring, p: PathWitness) -> bool:
    """Adjacent edges differ, adjacent internal vertices differ, and internal
    vertices differ from both of their path edges."""
    return is_proper_path(g, c, p, ConnectionMode.TPC)


def path_endpoint_colors(c: TotalColoring, p: PathWitness) -> EndColors:
    """Start/end edge and vertex colors of a path with at least one edge.

    For a single edge ``v1 v2``: both edge colors are ``c(v1 v2)``, the start
    vertex color is ``c(v2)`` and the end vertex color is ``c(v1)``.
    """
    vs = p.vertices
    if len(vs) < 2:
        raise PathError("endpoint colors need a path with at least one edge")
    if len(vs) == 2:
        e = c.edge_color(vs[0], vs[1])
        return EndColors(e, e, c.vertex_colors[vs[1]], c.vertex_colors[vs[0]])
    return EndColors(
        start_e=c.edge_color(vs[0], vs[1]),
        end_e=c.edge_color(vs[-2], vs[-1]),
        start_v=c.vertex_colors[vs[1]],
        end_v=c.vertex_colors[vs[-2]],
    )


def colors_at(g: Graph, c: TotalColoring, v: int) -> frozenset[int]:
    """``R(v)``: the color of ``v`` and of every edge at ``v``."""
    return frozenset([c.vertex_colors[v]] + [c.edge_colors[eid] for _, eid in g.incidence[v]])


class ProperPathFinder:
    """Search for proper paths in a colored graph given as color arrays.

    Arc ``2*e`` runs from the lower endpoint of edge ``e`` to the higher one,
    arc ``2*e + 1`` the other way.
    """

    def __init__(
        self,
        graph: Graph,
        vertex_colors: Sequence[Color],
        edge_colors: Sequence[Color],
        mode: ConnectionMode = ConnectionMode.TPC,
        max_length: int | None = None,
    ):
        self.graph = graph
        self.vc = vertex_colors
        self.ec = edge_colors
        self.mode = mode
        self.max_length = max_length
        self.tails: list[int] = []
        self.heads: list[int] = []
        for u, v in graph.edges:
            self.tails += [u, v]
            self.heads += [v, u]
        self.out_arcs: list[list[int]] = [[] for _ in range(graph.n)]
        for v in range(graph.n):
            for w, eid in graph.incidence[v]:
                self.out_arcs[v].append(2 * eid + (0 if v < w else 1))

    @classmethod
    def for_coloring(
        cls, c: TotalColoring, mode: ConnectionMode = ConnectionMode.TPC, max_length: int | None = None
    ) -> "ProperPathFinder":
        return cls(c.host, c.vertex_colors, c.edge_colors, mode, max_length)

    def can_follow(self, arc: int, nxt: int, source: int) -> bool:
        """May ``nxt`` follow ``arc`` on a path that started at ``source``?"""
        vc, ec, mode = self.vc, self.ec, self.mode
        p, b = self.tails[arc], self.heads[arc]
        e_in, e_out = ec[arc >> 1], ec[nxt >> 1]
        if mode is not ConnectionMode.PVC:
            if e_in is not None and e_in == e_out:
                return False
        cb = vc[b]
        if mode is ConnectionMode.TPC and cb is not None:
            if cb == e_in or cb == e_out:
                return False
        if mode is not ConnectionMode.PC and p != source:
            cp = vc[p]
            if cp is not None and cp == cb:
                return False
        return True

    def walk(self, arc: int, parent: list[int], source: int) -> list[int]:
        """Vertex sequence of the walk ending with ``arc`` in a search tree."""
        arcs = [arc]
        while parent[arcs[-1]] >= 0:
            arcs.append(parent[arcs[-1]])
        arcs.reverse()
        return [source] + [self.heads[a] for a in arcs]

    def arc_search(
        self,
        source: int,
        start_arcs: Sequence[int],
        blocked: set[int] | frozenset[int] = frozenset(),
        stop_at: int | None = None,
    ) -> list[int]:
        """Breadth-first search over arcs; returns the parent table.

        ``parent[a]`` is -2 for unreached arcs and -1 for start arcs. Arcs into
        ``blocked`` vertices are never entered and arcs into ``stop_at`` are
        reached but not extended.
        """
        parent = [-2] * len(self.heads)
        queue: deque[int] = deque()
        for a in start_arcs:
            if parent[a] == -2 and self.heads[a] not in blocked:
                parent[a] = -1
                queue.append(a)
        heads, out_arcs, follow = self.heads, self.out_arcs, self.can_follow
        while queue:
            a = queue.popleft()
            b = heads[a]
            if b == stop_at:
                continue
            back = a ^ 1
            for nxt in out_arcs[b]:
                if nxt == back or parent[nxt] != -2 or heads[nxt] in blocked:
                    continue
                if follow(a, nxt, source):
                    parent[nxt] = a
                    queue.append(nxt)
        return parent

    def find_path(
        self,
        source: int,
        target: int,
        first: ArcFilter | None = None,
        last: ArcFilter | None = None,
    ) -> list[int] | None:
        """A proper ``source``-``target`` path, optionally constrained on its first
        and last arcs, or ``None`` when none exists."""
        if source == target:
            raise PathError("a path needs two distinct endpoints")
        starts = [a for a in self.out_arcs[source] if first is None or first(a)]
        if not starts:
            return None
        parent = self.arc_search(source, starts, blocked={source}, stop_at=target)
        into = [a ^ 1 for a in self.out_arcs[target]]
        accepted = [a for a in into if parent[a] != -2 and (last is None or last(a))]
        if not accepted:
            return None
        for a in accepted:
            walk = self.walk(a, parent, source)
            if len(set(walk)) == len(walk) and self._short_enough(walk):
                return walk
        return self._exhaustive(source, target, starts, last)

    def _short_enough(self, path: list[int]) -> bool:
        return self.max_length is None or len(path) - 1 <= self.max_length

    def _exhaustive(
        self, source: int, target: int, starts: list[int], last: ArcFilter | None
    ) -> list[int] | None:
        heads, out_arcs = self.heads, self.out_arcs
        path = [source]
        on_path = {source}
        into_target = [a ^ 1 for a in out_arcs[target]]

        def promising(arc: int) -> bool:
            parent = self.arc_search(source, [arc], blocked=on_path - {heads[arc]}, stop_at=target)
            return any(parent[a] != -2 and (last is None or last(a)) for a in into_target)

        def extend(arc: int) -> bool:
            b = heads[arc]
            if b == target:
                return last is None or last(arc)
            if self.max_length is not None and len(path) - 1 >= self.max_length:
                return False
            if not promising(arc):
                return False
            for nxt in out_arcs[b]:
                c = heads[nxt]
                if c in on_path or not self.can_follow(arc, nxt, source):
                    continue
                path.append(c)
                on_path.add(c)
                if extend(nxt):
                    return True
                path.pop()
                on_path.discard(c)
            return False

        for arc in starts:
            b = heads[arc]
            path.append(b)
            on_path.add(b)
            if extend(arc):
                return list(path)
            path.pop()
            on_path.discard(b)
        return None

    def reachable_targets(self, source: int) -> tuple[list[int], set[int]]:
        """One arc search from ``source`` over the whole graph.

        Returns the parent table and the vertices reached by some walk.
        """
        parent = self.arc_search(source, self.out_arcs[source], blocked={source})
        reached = {self.heads[a] for a in range(len(self.heads)) if parent[a] != -2}
        return parent, reached

    def witness_from_search(self, source: int, target: int, parent: list[int]) -> list[int] | None:
        """A simple walk to ``target`` in an existing search tree, else an exact search."""
        into = [a ^ 1 for a in self.out_arcs[target]]
        hit = False
        for a in into:
            if parent[a] == -2:
                continue
            hit = True
            walk = self.walk(a, parent, source)
            if len(set(walk)) == len(walk) and self._short_enough(walk):
                return walk
        if not hit:
            return None
        return self.find_path(source, target)
