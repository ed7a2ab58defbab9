"""Graph family generators.

Deterministic kinds ignore randomness entirely; random kinds draw from
``random.Random(seed)`` so the same spec always yields the same graph.
"""

import logging
import random
from collections.abc import Callable, Sequence

import networkx as nx
from pydantic import ValidationError

from ..errors import FamilyParameterError
from ..models.coloring import TotalColoring
from ..models.family import FamilyKind, FamilySpec
from ..models.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)

Landmarks = dict[str, int]


def make_spec(kind: str, parameters: Sequence[int] = (), seed: int | None = None) -> FamilySpec:
    """Validate a family request, reporting problems as ``FamilyParameterError``."""
    try:
        family = FamilyKind(kind)
    except ValueError:
        known = ", ".join(k.value for k in FamilyKind)
        raise FamilyParameterError(f"unknown family '{kind}' (known: {known})")
    try:
        return FamilySpec(kind=family, parameters=tuple(parameters), seed=seed)
    except ValidationError as e:
        raise FamilyParameterError(f"invalid parameters for {kind}: {e.errors()[0]['msg']}")


def _path_edges(vertices: Sequence[int]) -> list[Edge]:
    return [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]


def _path(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    return Graph.from_edges(p[0], _path_edges(range(p[0]))), {}


def _cycle(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    n = p[0]
    return Graph.from_edges(n, _path_edges(range(n)) + [(0, n - 1)]), {}


def _complete(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    n = p[0]
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)]), {}


def _multipartite(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    starts = [sum(p[:i]) for i in range(len(p) + 1)]
    parts = [range(starts[i], starts[i + 1]) for i in range(len(p))]
    edges = [(a, b) for i, part in enumerate(parts) for other in parts[i + 1 :] for a in part for b in other]
    return Graph.from_edges(starts[-1], edges), {}


def _star(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    """``K_{1,n}`` with center 0."""
    n = p[0]
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)]), {}


def _prop3_layout(k: int) -> tuple[int, list[Edge], list[list[int]], Landmarks]:
    """Cycle of four segments of 2^k edges plus two ears parallel to the first and third.

    Returns n, the cycle edges, the two ears as vertex paths, and the landmarks.
    """
    seg = 2**k
    cycle = 4 * seg
    u1, u2, u3, u4 = 0, seg, 2 * seg, 3 * seg
    ear_a = [u1, *range(cycle, cycle + seg - 1), u2]
    ear_c = [u3, *range(cycle + seg - 1, cycle + 2 * seg - 2), u4]
    cycle_edges = _path_edges(range(cycle)) + [(0, cycle - 1)]
    landmarks = {
        "u1": u1,
        "u1'": cycle - 1,
        "u1''": u1 + 1,
        "u1'''": ear_a[1],
        "u2": u2,
        "u2'": u2 + 1,
        "u2''": u2 - 1,
        "u2'''": ear_a[-2],
        "u3": u3,
        "u3'": u3 - 1,
        "u3''": u3 + 1,
        "u3'''": ear_c[1],
        "u4": u4,
        "u4'": u4 + 1,
        "u4''": u4 - 1,
        "u4'''": ear_c[-2],
    }
    return cycle + 2 * (seg - 1), cycle_edges, [ear_a, ear_c], landmarks


def _prop3(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    n, cycle_edges, ears, landmarks = _prop3_layout(p[0])
    edges = cycle_edges + [e for ear in ears for e in _path_edges(ear)]
    return Graph.from_edges(n, edges), landmarks


def _prop4(p: tuple[int, ...], _: random.Random) -> tuple[Graph, Landmarks]:
    """Cycle of three segments of 6t edges; a 3-edge ear runs parallel to each segment."""
    seg = 6 * p[0]
    cycle = 3 * seg
    junctions = [0, seg, 2 * seg]
    edges = _path_edges(range(cycle)) + [(0, cycle - 1)]
    for i, w in enumerate(junctions):
        nxt = junctions[(i + 1) % 3]
        edges += _path_edges([w, cycle + 2 * i, cycle + 2 * i + 1, nxt])
    return Graph.from_edges(cycle + 6, edges), {"w1": junctions[0], "w2": junctions[1], "w3": junctions[2]}


def _random_connected(p: tuple[int, ...], rng: random.Random) -> tuple[Graph, Landmarks]:
    """Random spanning tree, then uniformly chosen extra edges up to ``m``."""
    n, m = p
    order = list(range(n))
    rng.shuffle(order)
    edges = {normalize_edge(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    missing = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    edges.update(rng.sample(missing, m - len(edges)))
    return Graph.from_edges(n, edges), {}


def _random_2connected(p: tuple[int, ...], rng: random.Random) -> tuple[Graph, Landmarks]:
    """Random cycle, then open ears through new vertices, then a few chords."""
    n = p[0]
    order = list(range(n))
    rng.shuffle(order)
    length = rng.randint(3, n)
    edges = {normalize_edge(a, b) for a, b in _path_edges(order[:length]) + [(order[0], order[length - 1])]}
    built = order[:length]
    rest = order[length:]
    while rest:
        take = rng.randint(1, min(3, len(rest)))
        internal, rest = rest[:take], rest[take:]
        u, v = rng.sample(built, 2)
        edges.update(normalize_edge(a, b) for a, b in _path_edges([u, *internal, v]))
        built += internal
    missing = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    edges.update(rng.sample(missing, rng.randint(0, min(len(missing), n // 2))))
    return Graph.from_edges(n, edges), {}


def _random_min_degree(p: tuple[int, ...], rng: random.Random) -> tuple[Graph, Landmarks]:
    """Pair degree stubs, top up vertices below the floor, then join components."""
    n, delta = p
    stubs = [v for v in range(n) for _ in range(delta)]
    rng.shuffle(stubs)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for a, b in zip(stubs[::2], stubs[1::2], strict=False):
        if a != b:
            graph.add_edge(a, b)
    for v in range(n):
        while graph.degree(v) < delta:
            choices = [w for w in range(n) if w != v and not graph.has_edge(v, w)]
            graph.add_edge(v, rng.choice(choices))
    components = sorted(sorted(c) for c in nx.connected_components(graph))
    for left, right in zip(components, components[1:], strict=False):
        graph.add_edge(rng.choice(left), rng.choice(right))
    return Graph.from_edges(n, graph.edges()), {}


_GENERATORS: dict[FamilyKind, Callable[[tuple[int, ...], random.Random], tuple[Graph, Landmarks]]] = {
    FamilyKind.PATH: _path,
    FamilyKind.CYCLE: _cycle,
    FamilyKind.COMPLETE: _complete,
    FamilyKind.COMPLETE_BIPARTITE: _multipartite,
    FamilyKind.COMPLETE_MULTIPARTITE: _multipartite,
    FamilyKind.STAR: _star,
    FamilyKind.PROP3: _prop3,
    FamilyKind.PROP4: _prop4,
    FamilyKind.RANDOM_CONNECTED: _random_connected,
    FamilyKind.RANDOM_2CONNECTED: _random_2connected,
    FamilyKind.RANDOM_MIN_DEGREE: _random_min_degree,
}


def generate(spec: FamilySpec) -> tuple[Graph, Landmarks]:
    """The graph a spec describes, with named vertices where the family has them."""
    graph, landmarks = _GENERATORS[spec.kind](spec.parameters, random.Random(spec.effective_seed))
    logger.debug(f"Generated {spec.kind.value}{list(spec.parameters)}: n={graph.n}, m={graph.m}")
    return graph, landmarks


def prop3_pc_coloring(k: int) -> TotalColoring:
    """Two edge colors on ``prop3(k)`` alternating around the cycle and along both ears.

    The first edge of each ear differs from the cycle edge leaving the same
    junction, so the ear together with its parallel segment alternates too.
    Vertex colors are all 1; only edge colors matter for proper connection.
    """
    if k < 2:
        raise FamilyParameterError("prop3 needs k >= 2")
    n, cycle_edges, ears, _ = _prop3_layout(k)
    graph = Graph.from_edges(n, cycle_edges + [e for ear in ears for e in _path_edges(ear)])
    colors: dict[Edge, int] = {}
    for i in range(len(cycle_edges) - 1):
        colors[(i, i + 1)] = i % 2 + 1
    colors[cycle_edges[-1]] = 2
    for ear in ears:
        for j, (a, b) in enumerate(_path_edges(ear)):
            colors[normalize_edge(a, b)] = (j + 1) % 2 + 1
    return TotalColoring.from_maps(graph, {v: 1 for v in range(n)}, colors)
