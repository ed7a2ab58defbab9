"""Structural graph algorithms the colorings are built on.

Connectivity, bridges and blocks come from networkx; the rest (ear ordering,
spanning tree degree reduction, two-way two-step domination, Hamiltonian
paths) is implemented here with deterministic tie-breaking: lowest vertex
index first, then lexicographic edge order.
"""

import logging
from collections import deque
from collections.abc import Iterable

import networkx as nx

from ..errors import NotConnectedError, SolverCapError, StructureError
from ..models.graph import (
    BlockDecomposition,
    Ear,
    EarDecomposition,
    Edge,
    Graph,
    RootPolicy,
    StructureProfile,
    TreeStrategy,
    normalize_edge,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_TREE_MAX_N = 10
HAMILTONIAN_MAX_N = 20


def bfs_distances(g: Graph, source: int, allowed: set[int] | None = None) -> list[int | None]:
    """Hop distances from ``source``; ``None`` for unreachable vertices.

    When ``allowed`` is given the search only enters vertices in it.
    """
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v]
        assert d is not None
        for w, _ in g.incidence[v]:
            if dist[w] is None and (allowed is None or w in allowed):
                dist[w] = d + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def require_connected(g: Graph, operation: str) -> None:
    """Raise ``NotConnectedError`` naming ``operation`` when ``g`` is disconnected."""
    if g.n == 0 or not is_connected(g):
        raise NotConnectedError(f"{operation} needs a connected graph")


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_two_connected(g: Graph) -> bool:
    """2-connected in the block sense: at least 3 vertices and no cut vertex."""
    return g.n >= 3 and nx.is_biconnected(g.to_networkx())


def diameter(g: Graph) -> int | None:
    """Largest hop distance, or ``None`` when disconnected."""
    if g.n == 0:
        return None
    worst = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for d in dist:
            if d is None:
                return None
            worst = max(worst, d)
    return worst


def find_bridges(g: Graph) -> tuple[Edge, ...]:
    return tuple(sorted(normalize_edge(a, b) for a, b in nx.bridges(g.to_networkx())))


def structure_profile(g: Graph) -> StructureProfile:
    """Bridges, bridge degree statistics, diameter and completeness of ``g``."""
    bridges = find_bridges(g)
    per_vertex = [0] * g.n
    for u, v in bridges:
        per_vertex[u] += 1
        per_vertex[v] += 1
    endpoints = {x for e in bridges for x in e}
    return StructureProfile(
        n=g.n,
        m=g.m,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        connected=is_connected(g),
        bridges=bridges,
        b=max(per_vertex, default=0),
        bridge_max_degree=max((g.degree(v) for v in endpoints), default=0),
        diameter=diameter(g),
        complete=g.is_complete,
    )


def lower_bound(g: Graph) -> int:
    """Known lower bound on tpc: 1 for complete graphs, otherwise max(3, b+1)."""
    if g.is_complete:
        return 1
    return max(3, structure_profile(g).b + 1)


def block_decomposition(g: Graph, root_policy: RootPolicy = RootPolicy.VERTEX0) -> BlockDecomposition:
    """Blocks of ``g`` with a breadth-first order over the block graph.

    Blocks are sorted by their sorted vertex tuples. The root is the lowest
    block containing vertex 0, or the block with the most edges under
    ``RootPolicy.LARGEST``.
    """
    require_connected(g, "block decomposition")
    if g.m == 0:
        raise StructureError("block decomposition needs at least one edge")

    graph = g.to_networkx()
    raw = []
    for component in nx.biconnected_component_edges(graph):
        edges = tuple(sorted(normalize_edge(a, b) for a, b in component))
        vertices = tuple(sorted({x for e in edges for x in e}))
        raw.append((vertices, edges))
    raw.sort()
    blocks = tuple(vertices for vertices, _ in raw)
    block_edges = tuple(edges for _, edges in raw)

    vertex_sets = [set(b) for b in blocks]
    links = [
        (i, j)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if vertex_sets[i] & vertex_sets[j]
    ]
    block_graph = Graph.from_edges(len(blocks), links)

    if root_policy is RootPolicy.LARGEST:
        root = max(range(len(blocks)), key=lambda i: (len(block_edges[i]), -i))
    else:
        root = min(i for i, b in enumerate(vertex_sets) if 0 in b)

    parents: list[int | None] = [None] * len(blocks)
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        current = queue.popleft()
        for nxt in block_graph.neighbors(current):
            if nxt not in seen:
                seen.add(nxt)
                parents[nxt] = current
                order.append(nxt)
                queue.append(nxt)

    return BlockDecomposition(
        blocks=blocks,
        block_edges=block_edges,
        cut_vertices=tuple(sorted(nx.articulation_points(graph))),
        block_graph=block_graph,
        bfs_order=tuple(order),
        parents=tuple(parents),
    )


def ear_decomposition(g: Graph) -> EarDecomposition:
    """Open ear decomposition of a 2-connected graph from a DFS chain decomposition."""
    if not is_two_connected(g):
        raise StructureError("ear decomposition needs a 2-connected graph")

    chains = list(nx.chain_decomposition(g.to_networkx(), root=0))
    first = chains[0]
    cycle = [first[0][0]] + [e[1] for e in first]
    if cycle[0] != cycle[-1]:
        raise StructureError("chain decomposition did not start with a cycle")
    base = tuple(cycle[:-1])

    built = set(base)
    ears = []
    for chain in chains[1:]:
        path = [chain[0][0]] + [e[1] for e in chain]
        u, v, internal = path[0], path[-1], path[1:-1]
        if u == v or u not in built or v not in built or built.intersection(internal):
            raise StructureError(f"chain {path} is not an open ear")
        ears.append(Ear(u=u, v=v, internal=tuple(internal)))
        built.update(internal)

    decomposition = EarDecomposition(base_cycle=base, ears=tuple(ears))
    if decomposition.all_edges() != set(g.edges):
        raise StructureError("ears do not cover the graph")
    return decomposition


def minimally_2connected_spanning(g: Graph) -> Graph:
    """Delete edges in lexicographic order while 2-connectivity survives.

    One pass is enough: once ``H - e`` has a cut vertex, every spanning
    subgraph of it has one too.
    """
    if not is_two_connected(g):
        raise StructureError("minimally 2-connected subgraph needs a 2-connected graph")
    graph = g.to_networkx()
    for u, v in g.edges:
        graph.remove_edge(u, v)
        if not nx.is_biconnected(graph):
            graph.add_edge(u, v)
    result = g.spanning(normalize_edge(a, b) for a, b in graph.edges())
    logger.debug(f"Minimally 2-connected spanning subgraph keeps {result.m} of {g.m} edges")
    return result


def _tree_degrees(n: int, edges: Iterable[Edge]) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _bfs_tree_edges(g: Graph) -> set[Edge]:
    tree = nx.bfs_tree(g.to_networkx(), 0)
    return {normalize_edge(a, b) for a, b in tree.edges()}


def _tree_path(n: int, tree: set[Edge], start: int, goal: int) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    parent = {start: start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def _reduce_max_degree(g: Graph, tree: set[Edge]) -> set[Edge]:
    """Swap edges to lower the number of maximum-degree tree vertices.

    A non-tree edge ``xy`` whose endpoints have tree degree at most Δ-2 closes a
    cycle; if that cycle passes through a vertex of degree Δ, one of its cycle
    edges is dropped. Each swap lowers (Δ, #vertices at Δ) lexicographically.
    """
    tree = set(tree)
    while True:
        deg = _tree_degrees(g.n, tree)
        delta = max(deg, default=0)
        if delta <= 2:
            return tree
        swapped = False
        for x, y in g.edges:
            if (x, y) in tree or deg[x] > delta - 2 or deg[y] > delta - 2:
                continue
            path = _tree_path(g.n, tree, x, y)
            for i in range(1, len(path) - 1):
                if deg[path[i]] == delta:
                    tree.discard(normalize_edge(path[i], path[i + 1]))
                    tree.add((x, y))
                    swapped = True
                    break
            if swapped:
                break
        if not swapped:
            return tree


def _bounded_degree_tree(g: Graph, bound: int) -> set[Edge] | None:
    """Spanning tree with maximum degree at most ``bound``, by include/exclude search."""
    n, edges = g.n, g.edges
    need = n - 1
    deg = [0] * n

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def completable(i: int, parent: list[int]) -> bool:
        # Could the chosen forest still be joined using edges i.. with spare degree?
        trial = list(parent)
        for u, v in edges[i:]:
            if deg[u] < bound and deg[v] < bound:
                ru, rv = find(trial, u), find(trial, v)
                if ru != rv:
                    trial[ru] = rv
        root = find(trial, 0)
        return all(find(trial, x) == root for x in range(n))

    chosen: list[Edge] = []

    def search(i: int, parent: list[int]) -> bool:
        if len(chosen) == need:
            return True
        if len(edges) - i < need - len(chosen) or not completable(i, parent):
            return False
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv and deg[u] < bound and deg[v] < bound:
            joined = list(parent)
            joined[ru] = rv
            chosen.append((u, v))
            deg[u] += 1
            deg[v] += 1
            if search(i + 1, joined):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        return search(i + 1, parent)

    if search(0, list(range(n))):
        return set(chosen)
    return None


def spanning_tree(g: Graph, strategy: TreeStrategy = TreeStrategy.BFS) -> Graph:
    """Spanning tree of a connected graph.

    ``exhaustive_min_delta`` returns a tree of minimum maximum degree and is
    limited to 10 vertices. ``min_max_degree_heuristic`` improves a BFS tree by
    local edge swaps and carries no optimality guarantee.
    """
    require_connected(g, "spanning tree")
    if strategy is TreeStrategy.BFS:
        return g.spanning(_bfs_tree_edges(g))
    if strategy is TreeStrategy.MIN_MAX_DEGREE_HEURISTIC:
        return g.spanning(_reduce_max_degree(g, _bfs_tree_edges(g)))

    if g.n > EXHAUSTIVE_TREE_MAX_N:
        raise SolverCapError(
            f"exhaustive minimum-degree spanning tree is limited to {EXHAUSTIVE_TREE_MAX_N} vertices, got {g.n}"
        )
    if g.n <= 2:
        return g.spanning(_bfs_tree_edges(g))
    for bound in range(2, g.n):
        found = _bounded_degree_tree(g, bound)
        if found is not None:
            return g.spanning(found)
    raise StructureError("no spanning tree found")  # unreachable for connected graphs


def tree_bound(g: Graph) -> tuple[int, bool]:
    """Upper bound min Δ(T)+1 over spanning trees, and whether it is exact.

    Exact (exhaustive) up to 10 vertices, heuristic above.
    """
    if g.n <= EXHAUSTIVE_TREE_MAX_N:
        tree = spanning_tree(g, TreeStrategy.EXHAUSTIVE_MIN_DELTA)
        return tree.max_degree + 1, True
    tree = spanning_tree(g, TreeStrategy.MIN_MAX_DEGREE_HEURISTIC)
    return tree.max_degree + 1, False


def dominating_layers(g: Graph, dset: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """``N1(D)`` and ``N2(D)``: vertices at distance exactly 1 and exactly 2 from ``D``."""
    d = set(dset)
    n1 = {w for v in d for w in g.adjacency[v]} - d
    n2 = {w for x in n1 for w in g.adjacency[x]} - d - n1
    return frozenset(n1), frozenset(n2)


def dominating_set_conditions(g: Graph, dset: Iterable[int]) -> dict[str, bool]:
    """Evaluate the four defining conditions of a connected two-way two-step dominating set."""
    d = set(dset)
    n1, n2 = dominating_layers(g, d)
    connected = False
    if d:
        dist = bfs_distances(g, min(d), allowed=d)
        connected = all(dist[v] is not None for v in d)
    return {
        "connected": connected,
        "contains_pendants": all(v in d for v in g.pendant_vertices),
        "two_step": len(d) + len(n1) + len(n2) == g.n,
        "two_way": all(sum(1 for w in g.adjacency[y] if w in n1) >= 2 for y in n2),
    }


def is_two_way_two_step_dominating(g: Graph, dset: Iterable[int]) -> bool:
    return all(dominating_set_conditions(g, dset).values())


def dominating_set_bound(g: Graph) -> float:
    """Size bound 3n/(δ+1) - 2 for connected two-way two-step dominating sets."""
    return 3 * g.n / (g.min_degree + 1) - 2


def _connect_set(g: Graph, d: set[int]) -> set[int]:
    d = set(d)
    while True:
        start = min(d)
        dist = bfs_distances(g, start, allowed=d)
        component = {v for v in d if dist[v] is not None}
        if len(component) == len(d):
            return d
        # Shortest path from the component to any other vertex of D.
        parent: dict[int, int | None] = {v: None for v in component}
        queue = deque(sorted(component))
        reached = None
        while queue and reached is None:
            x = queue.popleft()
            for w in g.neighbors(x):
                if w in parent:
                    continue
                parent[w] = x
                if w in d:
                    reached = w
                    break
                queue.append(w)
        if reached is None:
            raise NotConnectedError("dominating set spans more than one component")
        step: int | None = parent[reached]
        while step is not None and step not in component:
            d.add(step)
            step = parent[step]


def _repair_two_way(g: Graph, d: set[int]) -> set[int]:
    d = set(d)
    while True:
        n1, n2 = dominating_layers(g, d)
        bad = sorted(y for y in n2 if sum(1 for w in g.adjacency[y] if w in n1) < 2)
        if not bad:
            return d
        y = bad[0]
        d.add(min(w for w in g.adjacency[y] if w in n1))


def two_way_two_step_dominating_set(g: Graph) -> tuple[int, ...]:
    """A connected two-way two-step dominating set built by grow-and-prune.

    Greedy radius-2 cover, add pendant vertices, join components along
    shortest paths, promote ``N1`` neighbors of ``N2`` vertices lacking a
    second ``N1`` neighbor, then drop removable vertices. The size bound
    3n/(δ+1) - 2 is logged, not guaranteed.
    """
    if g.n < 4:
        raise StructureError(f"dominating set construction needs n >= 4, got {g.n}")
    require_connected(g, "two-way two-step dominating set")

    balls = []
    for v in range(g.n):
        ball = {v} | set(g.adjacency[v])
        for w in g.adjacency[v]:
            ball |= g.adjacency[w]
        balls.append(ball)

    uncovered = set(range(g.n))
    d: set[int] = set()
    while uncovered:
        best = max(range(g.n), key=lambda v: (len(balls[v] & uncovered), -v))
        d.add(best)
        uncovered -= balls[best]

    d |= set(g.pendant_vertices)
    d = _connect_set(g, d)
    d = _repair_two_way(g, d)

    changed = True
    while changed and len(d) > 1:
        changed = False
        for v in sorted(d):
            trial = d - {v}
            if trial and is_two_way_two_step_dominating(g, trial):
                d = trial
                changed = True

    bound = dominating_set_bound(g)
    if len(d) > bound:
        logger.warning(f"Dominating set has {len(d)} vertices, above the bound {bound:.2f}")
    else:
        logger.debug(f"Dominating set has {len(d)} vertices (bound {bound:.2f})")
    return tuple(sorted(d))


def hamiltonian_path(g: Graph) -> tuple[int, ...] | None:
    """A Hamiltonian path by backtracking, or ``None`` if there is none."""
    if g.n == 0 or not is_connected(g):
        return None
    if g.n == 1:
        return (0,)
    if g.n > HAMILTONIAN_MAX_N:
        logger.warning(f"Hamiltonian path search on {g.n} vertices may take long")

    pendants = g.pendant_vertices
    if len(pendants) > 2:
        return None
    starts = pendants if pendants else tuple(range(g.n))

    path: list[int] = []
    on_path: set[int] = set()

    def rest_reachable(tip: int) -> bool:
        remaining = g.n - len(on_path)
        if remaining == 0:
            return True
        allowed = set(range(g.n)) - on_path
        allowed.add(tip)
        dist = bfs_distances(g, tip, allowed=allowed)
        return sum(1 for v in allowed if dist[v] is not None) == remaining + 1

    def extend() -> bool:
        if len(path) == g.n:
            return True
        for w in g.neighbors(path[-1]):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if rest_reachable(w) and extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    for s in starts:
        path[:] = [s]
        on_path.clear()
        on_path.add(s)
        if extend():
            return tuple(path)
    return None
