"""Coloring constructions, each checked by the verifier before it is returned.

Every public ``color_*`` function returns a ``TotalColoring`` that is total
proper connected, or raises: ``StructureError`` when the input does not have
the shape the construction needs and ``ConstructionError`` when a verified
coloring could not be produced.
"""

import logging
import random
from collections import deque
from collections.abc import Iterator, Sequence

import networkx as nx

from ..errors import ConstructionError, StructureError
from ..models.coloring import ColoringMethod, ConnectionMode, TotalColoring
from ..models.config import ConstructorSettings
from ..models.graph import Edge, Graph, TreeStrategy, normalize_edge
from .paths import ProperPathFinder
from .search import phase_coloring
from .structure import (
    block_decomposition,
    dominating_layers,
    dominating_set_bound,
    ear_decomposition,
    hamiltonian_path,
    is_connected,
    is_tree,
    is_two_connected,
    minimally_2connected_spanning,
    require_connected,
    spanning_tree,
    structure_profile,
    two_way_two_step_dominating_set,
)
from .verifier import (
    failing_pairs,
    first_strong_failure,
    has_strong_property,
    is_total_proper_connected,
    strong_pair_paths,
)

logger = logging.getLogger(__name__)

FOUR_COLORS = (1, 2, 3, 4)


def _verified(g: Graph, c: TotalColoring, construction: str) -> TotalColoring:
    report = is_total_proper_connected(g, c)
    if not report.connected:
        raise ConstructionError(f"{construction}: no total proper path for pair {report.failing_pair}")
    logger.debug(f"{construction}: verified with {c.color_count} colors")
    return c


def color_complete(g: Graph) -> TotalColoring:
    """One color on everything; only complete graphs are total proper connected this way."""
    if not g.is_complete:
        raise StructureError("color_complete needs a complete graph")
    return TotalColoring.uniform(g)


# Trees


def _tree_colors(t: Graph) -> tuple[list[int], list[int]]:
    """Vertex and edge colors from ``1..Δ+1`` rooted at the lowest max-degree vertex."""
    root = max(range(t.n), key=lambda v: (t.degree(v), -v))
    palette = range(1, t.max_degree + 2)
    vc = [0] * t.n
    ec = [0] * t.m
    vc[root] = 1
    for color, (_, eid) in enumerate(t.incidence[root], start=2):
        ec[eid] = color

    parent_edge = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w, eid in t.incidence[u]:
            if w in parent_edge:
                continue
            parent_edge[w] = eid
            vc[w] = min(c for c in palette if c not in (vc[u], ec[eid]))
            free = (c for c in palette if c not in (vc[w], ec[eid]))
            for x, child_eid in t.incidence[w]:
                if x != u:
                    ec[child_eid] = next(free)
            queue.append(w)
    return vc, ec


def color_tree(t: Graph) -> TotalColoring:
    """A tree coloring with exactly Δ(T)+1 colors."""
    if t.n < 3 or not is_tree(t):
        raise StructureError("color_tree needs a tree on at least 3 vertices")
    vc, ec = _tree_colors(t)
    return _verified(t, TotalColoring(host=t, vertex_colors=tuple(vc), edge_colors=tuple(ec)), "tree")


# Cycles


def _cycle_coloring(length: int) -> tuple[list[int], list[int]]:
    """Colors along a cycle ``x_1 .. x_L``; edge ``i`` joins ``x_i`` and ``x_{i+1}``.

    Odd positions get vertex 3 and edge 1, even positions vertex 4 and edge 2;
    on odd cycles the last vertex gets 1 and the closing edge 4. The cycle has
    the strong property, including the triangle.
    """
    vertices: list[int] = []
    edges: list[int] = []
    for i in range(1, length + 1):
        if length % 2 and i == length:
            vertices.append(1)
            edges.append(4)
        elif i % 2:
            vertices.append(3)
            edges.append(1)
        else:
            vertices.append(4)
            edges.append(2)
    return vertices, edges


def _cycle_order(g: Graph) -> list[int]:
    """Vertices of a cycle graph in traversal order from vertex 0 towards its lower neighbor."""
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)) or not is_connected(g):
        raise StructureError("expected a cycle graph")
    order = [0]
    previous, current = -1, 0
    while True:
        nxt = next(w for w in g.neighbors(current) if w != previous)
        if nxt == 0:
            return order
        order.append(nxt)
        previous, current = current, nxt


def _color_along_cycle(g: Graph, order: Sequence[int]) -> TotalColoring:
    vertex_colors, edge_colors = _cycle_coloring(len(order))
    vc = [0] * g.n
    ec = [0] * g.m
    for i, v in enumerate(order):
        vc[v] = vertex_colors[i]
        ec[g.edge_id(v, order[(i + 1) % len(order)])] = edge_colors[i]
    return TotalColoring(host=g, vertex_colors=tuple(vc), edge_colors=tuple(ec))


def color_cycle(n: int) -> TotalColoring:
    """The alternating 4-coloring of ``C_n`` on vertices ``0..n-1`` in cycle order."""
    if n <= 3:
        raise StructureError(f"color_cycle needs n >= 4, got {n}; C_3 is complete")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    return _verified(g, _color_along_cycle(g, list(range(n))), "cycle")


def color_cycle_graph(g: Graph) -> TotalColoring:
    """``color_cycle`` for a cycle given with arbitrary vertex labels."""
    if g.is_complete:
        return color_complete(g)
    return _verified(g, _color_along_cycle(g, _cycle_order(g)), "cycle")


# Complete bipartite and multipartite graphs


def _bipartite_coloring(
    g: Graph, side_u: Sequence[int], side_v: Sequence[int], interleaved: bool = True
) -> TotalColoring:
    """Three colors on a spanning ``K_{U,V}`` with ``2 <= |U| <= |V|``; other elements get 3."""
    vc = {v: 3 for v in range(g.n)}
    ec = {e: 3 for e in g.edges}

    def paint_edge(a: int, b: int, color: int) -> None:
        ec[normalize_edge(a, b)] = color

    if len(side_u) == 2:
        u1, u2 = side_u
        v1 = side_v[0]
        vc[u1] = 1
        paint_edge(v1, u2, 1)
        vc[u2] = 2
        paint_edge(u1, v1, 2)
        return TotalColoring.from_maps(g, vc, ec)

    u1, u2, u3 = side_u[:3]
    v1, v2, v3 = side_v[:3]
    cycle = [u1, v1, u2, v2, u3, v3]
    cycle_edges = [(cycle[i], cycle[(i + 1) % 6]) for i in range(6)]
    if interleaved:
        # u1, u1v1, v1, v1u2, ... around the 6-cycle
        for i in range(6):
            vc[cycle[i]] = (2 * i) % 3 + 1
            paint_edge(*cycle_edges[i], (2 * i + 1) % 3 + 1)
    else:
        for i in range(6):
            vc[cycle[i]] = i % 3 + 1
            paint_edge(*cycle_edges[i], i % 3 + 1)
    for v in side_v[3:]:
        paint_edge(u3, v, 1)
    for u in side_u[3:]:
        paint_edge(u, v1, 2)
    return TotalColoring.from_maps(g, vc, ec)


def _color_spanning_bipartite(g: Graph, side_u: Sequence[int], side_v: Sequence[int], name: str) -> TotalColoring:
    if len(side_u) > len(side_v):
        side_u, side_v = side_v, side_u
    for interleaved in (True, False):
        c = _bipartite_coloring(g, side_u, side_v, interleaved)
        report = is_total_proper_connected(g, c)
        if report.connected:
            if not interleaved:
                logger.warning(f"{name}: interleaved 6-cycle coloring failed, alternate reading used")
            return c
        reading = "interleaved" if interleaved else "alternate"
        logger.warning(f"{name}: {reading} 6-cycle coloring fails for pair {report.failing_pair}")
    raise ConstructionError(f"{name}: no three-color scheme verified")


def _multipartite_parts(g: Graph) -> list[tuple[int, ...]]:
    """Parts of a complete multipartite graph, ordered by their lowest vertex."""
    complement = nx.complement(g.to_networkx())
    parts = sorted(tuple(sorted(c)) for c in nx.connected_components(complement))
    for part in parts:
        if complement.subgraph(part).number_of_edges() != len(part) * (len(part) - 1) // 2:
            raise StructureError("expected a complete multipartite graph")
    return parts


def _color_multipartite_graph(g: Graph, parts: Sequence[Sequence[int]]) -> TotalColoring:
    if g.is_complete:
        return color_complete(g)
    if len(parts) < 2:
        raise StructureError("a complete multipartite graph needs at least two parts")
    if len(parts) == 2 and min(len(p) for p in parts) == 1:
        return color_tree(g)

    side_x = list(parts[0])
    rest = 1
    if len(side_x) == 1:
        side_x += parts[1]
        rest = 2
    side_y = [v for p in parts[rest:] for v in p]
    if len(side_y) < 2:
        big = next(i for i, p in enumerate(parts) if len(p) >= 2)
        side_x = list(parts[big])
        side_y = [v for i, p in enumerate(parts) if i != big for v in p]
    return _color_spanning_bipartite(g, sorted(side_x), sorted(side_y), "complete multipartite")


def _multipartite_graph(sizes: Sequence[int]) -> tuple[Graph, list[tuple[int, ...]]]:
    parts: list[tuple[int, ...]] = []
    start = 0
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    edges = [(a, b) for i, p in enumerate(parts) for q in parts[i + 1 :] for a in p for b in q]
    return Graph.from_edges(start, edges), parts


def color_complete_bipartite(m: int, n: int) -> TotalColoring:
    """Three colors on ``K_{m,n}``; sides are ``0..m-1`` and ``m..m+n-1``.

    ``K_{1,n}`` is a star and goes to the tree construction (``K_{1,1}`` is complete).
    """
    if m < 1 or n < 1:
        raise StructureError("part sizes must be positive")
    if m > n:
        raise StructureError(f"expected m <= n, got m={m}, n={n}")
    g, parts = _multipartite_graph([m, n])
    if m == 1:
        return color_complete(g) if n == 1 else color_tree(g)
    return _color_spanning_bipartite(g, parts[0], parts[1], f"K_{{{m},{n}}}")


def color_complete_bipartite_graph(g: Graph) -> TotalColoring:
    parts = _multipartite_parts(g)
    if len(parts) != 2:
        raise StructureError("expected a complete bipartite graph")
    return _color_multipartite_graph(g, parts)


def color_complete_multipartite(parts: Sequence[int]) -> TotalColoring:
    """Three colors on a complete multipartite graph that is neither complete nor a star."""
    if len(parts) < 2 or min(parts) < 1:
        raise StructureError("need at least two parts of positive size")
    g, vertex_parts = _multipartite_graph(parts)
    return _color_multipartite_graph(g, vertex_parts)


def color_complete_multipartite_graph(g: Graph) -> TotalColoring:
    return _color_multipartite_graph(g, _multipartite_parts(g))


# 2-connected graphs


def _ear_candidates(
    p: int, cu: int, cv: int, preferred: int | None, cap: int
) -> Iterator[tuple[list[int], list[int]]]:
    """Colorings ``e_0, x_1, e_1, ..., x_p, e_p`` of an ear from ``u`` to ``v``.

    The ear is a total proper path, its first internal vertex and first edge
    avoid ``c(u)``, and its last internal vertex and last edge avoid ``c(v)``.
    """
    first = [preferred] if preferred is not None else []
    first += [c for c in FOUR_COLORS if c != preferred]
    edges = [0] * (p + 1)
    verts = [0] * p
    produced = 0

    def edge(i: int) -> Iterator[tuple[list[int], list[int]]]:
        nonlocal produced
        options = first if i == 0 else list(FOUR_COLORS)
        for c in options:
            if produced >= cap:
                return
            if i == 0 and c == cu:
                continue
            if i > 0 and c in (edges[i - 1], verts[i - 1]):
                continue
            if i == p and c == cv:
                continue
            edges[i] = c
            if i == p:
                produced += 1
                yield list(edges), list(verts)
            else:
                yield from vertex(i)

    def vertex(i: int) -> Iterator[tuple[list[int], list[int]]]:
        before = verts[i - 1] if i > 0 else cu
        for c in FOUR_COLORS:
            if c in (edges[i], before) or (i == p - 1 and c == cv):
                continue
            verts[i] = c
            yield from edge(i + 1)

    yield from edge(0)


def _two_connected_coloring(g: Graph, settings: ConstructorSettings) -> TotalColoring:
    """Four colors with the strong property, built ear by ear."""
    h = minimally_2connected_spanning(g)
    decomposition = ear_decomposition(h)

    vcol: dict[int, int] = {}
    ecol: dict[Edge, int] = {}
    cycle = decomposition.base_cycle
    vertex_colors, edge_colors = _cycle_coloring(len(cycle))
    for i, v in enumerate(cycle):
        vcol[v] = vertex_colors[i]
        ecol[normalize_edge(v, cycle[(i + 1) % len(cycle)])] = edge_colors[i]
    built = set(cycle)

    for ear in decomposition.ears:
        current = g.spanning(ecol)
        finder = ProperPathFinder(
            current, [vcol.get(v) for v in range(g.n)], [ecol[e] for e in current.edges]
        )
        preferred = None
        certificate = strong_pair_paths(finder, ear.u, ear.v)
        if certificate is not None:
            starts = {ecol[normalize_edge(path[0], path[1])] for path in certificate}
            spare = [c for c in FOUR_COLORS if c != vcol[ear.u] and c not in starts]
            preferred = spare[0] if spare else None

        extended = g.spanning(list(ecol) + list(ear.edges))
        vc: list[int | None] = [vcol.get(v) for v in range(g.n)]
        ec: list[int | None] = [ecol.get(e) for e in extended.edges]
        ear_ids = [extended.edge_id(a, b) for a, b in ear.edges]
        finder = ProperPathFinder(extended, vc, ec)
        members = sorted(built | set(ear.internal))
        pairs = sorted(
            {normalize_edge(x, y) for x in ear.internal for y in members if x != y}
            | ({normalize_edge(ear.u, ear.v)} if not ear.internal else set())
        )

        accepted = False
        tried = 0
        for edge_choice, vertex_choice in _ear_candidates(
            len(ear.internal), vcol[ear.u], vcol[ear.v], preferred, settings.ear_candidate_cap
        ):
            tried += 1
            for eid, color in zip(ear_ids, edge_choice, strict=True):
                ec[eid] = color
            for x, color in zip(ear.internal, vertex_choice, strict=True):
                vc[x] = color
            if first_strong_failure(finder, pairs) is None:
                accepted = True
                break
        if not accepted:
            raise ConstructionError(f"no coloring of ear {ear.path} keeps the strong property ({tried} tried)")
        logger.debug(f"Ear {ear.path} colored after {tried} candidate(s)")
        for eid, (a, b) in zip(ear_ids, ear.edges, strict=True):
            ecol[(a, b)] = ec[eid] or 1
        for x in ear.internal:
            vcol[x] = vc[x] or 1
        built.update(ear.internal)

    for u, v in g.edges:
        ecol.setdefault((u, v), vcol[u])
    return TotalColoring.from_maps(g, vcol, ecol)


def color_2connected(g: Graph, settings: ConstructorSettings | None = None) -> TotalColoring:
    """At most four colors on a 2-connected graph, with the strong property."""
    if not is_two_connected(g):
        raise StructureError("color_2connected needs a 2-connected graph")
    c = _verified(g, _two_connected_coloring(g, settings or ConstructorSettings()), "2-connected")
    strong = has_strong_property(g, c)
    if not strong.holds:
        raise ConstructionError(f"2-connected: strong property fails for pair {strong.failing_pair}")
    return c


# General connected graphs


def color_general(g: Graph, settings: ConstructorSettings | None = None) -> TotalColoring:
    """At most max(Δ̃+1, 4) colors, block by block from a root block.

    Nontrivial blocks are colored with the strong property and their four
    colors moved into the window ``c(v), c(v)+1, c(v)+2, c(v)+3`` (mod k) at
    the cut vertex ``v`` they hang from. Bridges at ``v`` take distinct colors
    not yet present at ``v``.
    """
    settings = settings or ConstructorSettings()
    require_connected(g, "color_general")
    if g.n < 2:
        raise StructureError("color_general needs at least 2 vertices")
    if g.is_complete:
        return color_complete(g)

    k = max(structure_profile(g).bridge_max_degree + 1, 4)
    blocks = block_decomposition(g)
    vc: list[int | None] = [None] * g.n
    ec: list[int | None] = [None] * g.m
    done: set[int] = set()

    def paint_block(index: int, anchor: int | None) -> list[int]:
        sub, original = g.subgraph(blocks.blocks[index], blocks.block_edges[index])
        local = _two_connected_coloring(sub, settings)
        if anchor is None:
            window = {c: c for c in FOUR_COLORS}
        else:
            base = local.vertex_colors[original.index(anchor)]
            anchor_color = vc[anchor]
            assert anchor_color is not None
            slots = [(anchor_color - 1 + i) % k + 1 for i in range(4)]
            window = {c: slots[(c - base) % 4] for c in FOUR_COLORS}
        for i, v in enumerate(original):
            vc[v] = window[local.vertex_colors[i]]
        for (a, b), color in zip(sub.edges, local.edge_colors, strict=True):
            ec[g.edge_id(original[a], original[b])] = window[color]
        done.add(index)
        return [v for v in original if v != anchor]

    root = blocks.root
    if blocks.is_trivial(root):
        a, b = blocks.blocks[root]
        vc[a], vc[b] = 1, 2
        ec[g.edge_id(a, b)] = 3
        done.add(root)
    else:
        paint_block(root, None)
    queue = deque(sorted(blocks.blocks[root]))

    while queue:
        v = queue.popleft()
        pending = [i for i in blocks.blocks_at(v) if i not in done]
        for i in pending:
            if not blocks.is_trivial(i):
                queue.extend(sorted(paint_block(i, v)))
        present = {vc[v]} | {ec[eid] for _, eid in g.incidence[v] if ec[eid] is not None}
        free = [c for c in range(1, k + 1) if c not in present]
        bridges = [i for i in pending if blocks.is_trivial(i)]
        if len(bridges) > len(free):
            raise ConstructionError(f"not enough colors for the bridges at vertex {v}")
        for i, color in zip(bridges, free, strict=False):
            w = next(x for x in blocks.blocks[i] if x != v)
            ec[g.edge_id(v, w)] = color
            vc[w] = min(c for c in range(1, k + 1) if c not in (vc[v], color))
            done.add(i)
            queue.append(w)

    c = TotalColoring(
        host=g,
        vertex_colors=tuple(x or 1 for x in vc),
        edge_colors=tuple(x or 1 for x in ec),
    )
    return _verified(g, c, "general")


# Minimum degree


def _assign_alpha(g: Graph, d: set[int], n1: frozenset[int], n2: frozenset[int]) -> dict[int, int]:
    """Give every ``N1`` vertex 1 or 2 so that each ``N2`` vertex sees both values."""
    alpha: dict[int, int] = {}
    by_need = sorted(n2, key=lambda y: (sum(1 for x in g.adjacency[y] if x in n1), y))
    for y in by_need:
        around = sorted(x for x in g.adjacency[y] if x in n1)
        missing = [a for a in (1, 2) if a not in {alpha[x] for x in around if x in alpha}]
        for x in around:
            if not missing:
                break
            if x not in alpha:
                alpha[x] = missing.pop(0)

    def both(y: int) -> bool:
        return {alpha.get(x) for x in g.adjacency[y] if x in n1} >= {1, 2}

    for _ in range(3):
        lacking = [y for y in sorted(n2) if not both(y)]
        if not lacking:
            break
        for y in lacking:
            for x in sorted(w for w in g.adjacency[y] if w in n1):
                if x not in alpha:
                    continue
                alpha[x] = 3 - alpha[x]
                others = [z for z in g.adjacency[x] if z in n2 and z != y]
                if both(y) and all(both(z) for z in others):
                    break
                alpha[x] = 3 - alpha[x]

    turn: dict[int, int] = {}
    for x in sorted(n1):
        if x in alpha:
            continue
        anchor = min(w for w in g.adjacency[x] if w in d)
        turn[anchor] = turn.get(anchor, 0) + 1
        alpha[x] = 1 if turn[anchor] % 2 else 2
    return alpha


def _dominating_tree_colors(g: Graph, dset: Sequence[int]) -> tuple[dict[int, int], dict[Edge, int]]:
    """Colors from ``4..Δ(T)+4`` on a spanning tree ``T`` of ``G[D]``."""
    if len(dset) == 1:
        return {dset[0]: 4}, {}
    if len(dset) == 2:
        a, b = dset
        return {a: 4, b: 5}, {normalize_edge(a, b): 3}
    sub, original = g.subgraph(dset)
    tree = spanning_tree(sub, TreeStrategy.MIN_MAX_DEGREE_HEURISTIC)
    vc, ec = _tree_colors(tree)
    vertices = {original[i]: color + 3 for i, color in enumerate(vc)}
    edges = {normalize_edge(original[a], original[b]): color + 3 for (a, b), color in zip(tree.edges, ec, strict=True)}
    return vertices, edges


def _repair(
    g: Graph,
    vc: list[int | None],
    ec: list[int | None],
    fringe_edges: list[int],
    fringe_vertices: set[int],
    spare_edges: list[int],
    top: int,
    settings: ConstructorSettings,
) -> bool:
    """Recolor fringe elements near failing pairs until every pair connects."""
    rng = random.Random(settings.repair_seed)
    finder = ProperPathFinder(g, vc, ec, ConnectionMode.TPC)
    failures = failing_pairs(finder)
    if failures:
        logger.warning(f"Minimum-degree coloring: {len(failures)} failing pair(s), starting repair")
    rounds = settings.repair_rounds
    for round_no in range(rounds):
        if not failures:
            return True
        wide = round_no >= rounds // 2
        palette = range(1, (top if wide else 3) + 1)
        edges = set(fringe_edges) | (set(spare_edges) if wide else set())
        u, v = rng.choice(failures)
        around = {u, v} | set(g.adjacency[u]) | set(g.adjacency[v])
        candidates: list[tuple[bool, int]] = sorted(
            {(False, eid) for x in around for _, eid in g.incidence[x] if eid in edges}
            | ({(True, x) for x in around if x in fringe_vertices} if wide else set())
        )
        if not candidates:
            continue
        best: tuple[int, bool, int, int] | None = None
        for _ in range(min(24, len(candidates) * len(palette))):
            is_vertex, index = rng.choice(candidates)
            colors = vc if is_vertex else ec
            old = colors[index]
            new = rng.choice([c for c in palette if c != old] or [old])
            colors[index] = new
            count = len(failing_pairs(finder))
            colors[index] = old
            if best is None or count < best[0]:
                best = (count, is_vertex, index, new)
        if best is not None and best[0] <= len(failures):
            _, is_vertex, index, new = best
            (vc if is_vertex else ec)[index] = new
            failures = failing_pairs(finder)
    return not failures


def color_min_degree(g: Graph, settings: ConstructorSettings | None = None) -> TotalColoring:
    """At most |D|+3 colors around a connected two-way two-step dominating set ``D``.

    ``D`` is spanned by a tree colored from ``4..``; ``N1(D)`` vertices get 3
    and ``N2(D)`` vertices get 4. Each ``N1`` vertex ``x`` has a value
    ``α(x)`` in {1, 2} such that every ``N2`` vertex sees both values; ``x``
    joins its lowest ``D`` neighbor with color ``α(x)`` and its other edges use
    ``3 - α(x)``. Failing pairs left over are repaired by recoloring fringe
    elements within the colors already in use.
    """
    settings = settings or ConstructorSettings()
    if g.n < 4:
        raise StructureError(f"color_min_degree needs n >= 4, got {g.n}")
    require_connected(g, "color_min_degree")

    dset = two_way_two_step_dominating_set(g)
    d = set(dset)
    n1, n2 = dominating_layers(g, d)
    bound = dominating_set_bound(g)
    logger.info(f"Dominating set of size {len(d)}, bound 3n/(δ+1)-2 = {bound:.2f}")

    tree_vertices, tree_edges = _dominating_tree_colors(g, dset)
    alpha = _assign_alpha(g, d, n1, n2)
    attach = {x: min(w for w in g.adjacency[x] if w in d) for x in n1}

    vc: list[int | None] = [None] * g.n
    ec: list[int | None] = [None] * g.m
    for v in range(g.n):
        vc[v] = tree_vertices[v] if v in d else 3 if v in n1 else 4

    fringe_edges: list[int] = []
    spare_edges: list[int] = []
    for eid, (a, b) in enumerate(g.edges):
        if a in d and b in d:
            if (a, b) in tree_edges:
                ec[eid] = tree_edges[(a, b)]
            else:
                ec[eid] = 4
                spare_edges.append(eid)
            continue
        fringe_edges.append(eid)
        if a in d or b in d:
            x, w = (b, a) if a in d else (a, b)
            ec[eid] = alpha[x] if attach[x] == w else 3 - alpha[x]
        elif a in n1 and b in n1:
            ec[eid] = 3 - alpha[max(a, b)]
        elif a in n1 or b in n1:
            ec[eid] = 3 - alpha[a if a in n1 else b]
        else:
            ec[eid] = 3

    top = max(max(c for c in vc if c is not None), max((c for c in ec if c is not None), default=1), 4)
    fringe_vertices = set(n1 | n2)
    if not _repair(g, vc, ec, fringe_edges, fringe_vertices, spare_edges, top, settings):
        raise ConstructionError("minimum-degree coloring: repair rounds exhausted")

    c = TotalColoring(
        host=g,
        vertex_colors=tuple(x or 1 for x in vc),
        edge_colors=tuple(x or 1 for x in ec),
    )
    return _verified(g, c, "minimum degree")


# Traceable graphs


def color_traceable(g: Graph, h: Sequence[int] | None = None) -> TotalColoring:
    """Three colors along a Hamiltonian path ``h``; off-path edges get 3.

    The path's vertices and edges are colored 1, 2, 3 in turn. Without ``h``
    a Hamiltonian path is searched for.
    """
    if g.is_complete:
        return color_complete(g)
    if h is None:
        found = hamiltonian_path(g)
        if found is None:
            raise StructureError("the graph has no Hamiltonian path")
        h = found
    if sorted(h) != list(range(g.n)):
        raise StructureError("h must visit every vertex exactly once")
    for a, b in zip(h, h[1:], strict=False):
        if not g.has_edge(a, b):
            raise StructureError(f"h is not a path: {a} and {b} are not adjacent")

    vc = [0] * g.n
    ec = [3] * g.m
    for i, v in enumerate(h):
        vc[v] = (2 * i) % 3 + 1
        if i + 1 < len(h):
            ec[g.edge_id(v, h[i + 1])] = (2 * i + 1) % 3 + 1
    return _verified(g, TotalColoring(host=g, vertex_colors=tuple(vc), edge_colors=tuple(ec)), "traceable")


def color_phase(g: Graph) -> TotalColoring:
    """The periodic 3-coloring from vertex phases; needs compatible cycle lengths."""
    c = phase_coloring(g)
    if c is None:
        raise ConstructionError("cycle and ear lengths do not allow a phase coloring")
    return _verified(g, c, "phase")


def construct(method: ColoringMethod, g: Graph, settings: ConstructorSettings | None = None) -> TotalColoring:
    """Run the construction named by ``method`` on ``g``."""
    settings = settings or ConstructorSettings()
    if method is ColoringMethod.COMPLETE:
        return color_complete(g)
    if method is ColoringMethod.TREE:
        return color_tree(g)
    if method is ColoringMethod.CYCLE:
        return color_cycle_graph(g)
    if method is ColoringMethod.COMPLETE_BIPARTITE:
        return color_complete_bipartite_graph(g)
    if method is ColoringMethod.COMPLETE_MULTIPARTITE:
        return color_complete_multipartite_graph(g)
    if method is ColoringMethod.TWO_CONNECTED:
        return color_2connected(g, settings)
    if method is ColoringMethod.GENERAL:
        return color_general(g, settings)
    if method is ColoringMethod.MIN_DEGREE:
        return color_min_degree(g, settings)
    if method is ColoringMethod.TRACEABLE:
        return color_traceable(g)
    return color_phase(g)
