"""Hypothesis strategies for graphs and colorings."""

from hypothesis import strategies as st

from tpconn.models.coloring import PathWitness, TotalColoring
from tpconn.models.graph import Graph, normalize_edge


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    """A random spanning tree plus a few random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {normalize_edge(i, draw(st.integers(0, i - 1))) for i in range(1, n)}
    vertex = st.integers(0, n - 1)
    extra = draw(st.lists(st.tuples(vertex, vertex), max_size=n))
    edges |= {normalize_edge(a, b) for a, b in extra if a != b}
    return Graph.from_edges(n, edges)


@st.composite
def two_connected_graphs(draw, max_n: int = 9) -> Graph:
    """A cycle with ears through new vertices and random chords."""
    n = draw(st.integers(3, max_n))
    length = draw(st.integers(3, n))
    edges = {normalize_edge(i, (i + 1) % length) for i in range(length)}
    built = length
    while built < n:
        take = draw(st.integers(1, n - built))
        u = draw(st.integers(0, built - 1))
        v = draw(st.integers(0, built - 1).filter(lambda x, u=u: x != u))
        chain = [u, *range(built, built + take), v]
        edges |= {normalize_edge(a, b) for a, b in zip(chain, chain[1:], strict=False)}
        built += take
    vertex = st.integers(0, n - 1)
    chords = draw(st.lists(st.tuples(vertex, vertex), max_size=3))
    edges |= {normalize_edge(a, b) for a, b in chords if a != b}
    return Graph.from_edges(n, edges)


@st.composite
def colorings(draw, graph: Graph, k: int = 3) -> TotalColoring:
    color = st.integers(1, k)
    return TotalColoring(
        host=graph,
        vertex_colors=tuple(draw(color) for _ in range(graph.n)),
        edge_colors=tuple(draw(color) for _ in range(graph.m)),
    )


@st.composite
def simple_paths(draw, graph: Graph) -> PathWitness:
    """A path grown from a random start through unvisited neighbors."""
    walk = [draw(st.integers(0, graph.n - 1))]
    while True:
        options = sorted(graph.adjacency[walk[-1]] - set(walk))
        if not options or not draw(st.booleans()):
            return PathWitness.of(walk)
        walk.append(draw(st.sampled_from(options)))


def palette_permutations(k: int = 3) -> st.SearchStrategy[dict[int, int]]:
    """Bijections of ``1..k`` onto itself."""
    colors = list(range(1, k + 1))
    return st.permutations(colors).map(lambda image: dict(zip(colors, image, strict=True)))
