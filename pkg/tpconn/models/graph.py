"""Graph models: the simple undirected graph and its structural skeletons."""

from collections.abc import Iterable, Sequence
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

if TYPE_CHECKING:
    import networkx as nx

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge with its smaller endpoint first."""
    return (u, v) if u <= v else (v, u)


class Graph(BaseModel):
    """A simple, finite, undirected graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` in lexicographic order.
    The position of an edge in ``edges`` is its edge id; colorings and the path
    search index edge colors by it.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    edges: tuple[Edge, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def sort_edges(cls, v: Any) -> Any:
        """Orient every pair as (low, high) and sort; duplicates are kept for the model check."""
        if isinstance(v, Iterable) and not isinstance(v, str | bytes):
            pairs = []
            for item in v:
                a, b = item
                pairs.append(normalize_edge(int(a), int(b)))
            return tuple(sorted(pairs))
        return v

    @model_validator(mode="after")
    def check_simple(self) -> "Graph":
        """Reject self-loops, duplicate edges and out-of-range endpoints."""
        previous: Edge | None = None
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if previous == (u, v):
                raise ValueError(f"duplicate edge ({u}, {v})")
            previous = (u, v)
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from any iterable of vertex pairs."""
        return cls(n=n, edges=tuple((int(e[0]), int(e[1])) for e in edges))

    @classmethod
    def from_networkx(cls, graph: "nx.Graph") -> tuple["Graph", tuple[Any, ...]]:
        """Relabel a networkx graph onto ``0..n-1`` in sorted node order.

        Returns the graph and the original node labels indexed by new vertex id.
        """
        nodes = tuple(sorted(graph.nodes()))
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in graph.edges()]
        return cls.from_edges(len(nodes), edges), nodes

    def to_networkx(self) -> "nx.Graph":
        """Return an equivalent networkx graph with sorted node and edge insertion."""
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def element_count(self) -> int:
        """Number of vertices plus edges, the size of a total coloring."""
        return self.n + len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Map from normalized edge to edge id."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge id)`` pairs in increasing neighbor order."""
        table: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            table[u].append((v, eid))
            table[v].append((u, eid))
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets per vertex."""
        return tuple(frozenset(w for w, _ in row) for row in self.incidence)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in increasing order."""
        return tuple(w for w, _ in self.incidence[v])

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of ``uv``; raises ``KeyError`` when the edge is absent."""
        return self.edge_index[normalize_edge(u, v)]

    @property
    def max_degree(self) -> int:
        return max((len(row) for row in self.incidence), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(row) for row in self.incidence), default=0)

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    @property
    def pendant_vertices(self) -> tuple[int, ...]:
        """Vertices of degree one."""
        return tuple(v for v in range(self.n) if len(self.incidence[v]) == 1)

    def subgraph(self, vertices: Iterable[int], edges: Iterable[Edge] | None = None) -> tuple["Graph", tuple[int, ...]]:
        """Relabel an induced (or edge-restricted) subgraph onto ``0..k-1``.

        Returns the subgraph and the original vertex of each new vertex id.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        if edges is None:
            chosen = [e for e in self.edges if e[0] in index and e[1] in index]
        else:
            chosen = [normalize_edge(*e) for e in edges]
        return Graph.from_edges(len(keep), [(index[u], index[v]) for u, v in chosen]), keep

    def spanning(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set with the given edges."""
        return Graph.from_edges(self.n, edges)


class StructureProfile(BaseModel):
    """Connectivity and bridge statistics of a graph.

    ``diameter`` is ``None`` when the graph is disconnected (the infinite
    diameter sentinel).
    """

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    max_degree: int
    min_degree: int
    connected: bool
    bridges: tuple[Edge, ...] = ()
    b: int = 0
    bridge_max_degree: int = 0
    diameter: int | None = None
    complete: bool = False

    @model_validator(mode="after")
    def check_bounds(self) -> "StructureProfile":
        if not self.b <= self.bridge_max_degree <= self.max_degree:
            raise ValueError("expected b <= bridge_max_degree <= max_degree")
        return self

    @property
    def has_bridges(self) -> bool:
        return bool(self.bridges)

    @property
    def diameter_display(self) -> str:
        return "inf" if self.diameter is None else str(self.diameter)


class RootPolicy(str, Enum):
    """How the root block of a block decomposition is chosen."""

    VERTEX0 = "vertex0"
    LARGEST = "largest"


class TreeStrategy(str, Enum):
    """Spanning tree construction strategies."""

    BFS = "bfs"
    MIN_MAX_DEGREE_HEURISTIC = "min_max_degree_heuristic"
    EXHAUSTIVE_MIN_DELTA = "exhaustive_min_delta"


class BlockDecomposition(BaseModel):
    """Blocks of a connected graph ordered breadth-first from a root block."""

    model_config = ConfigDict(frozen=True)

    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: tuple[int, ...]
    block_graph: Graph
    bfs_order: tuple[int, ...]
    parents: tuple[int | None, ...]

    @model_validator(mode="after")
    def check_order(self) -> "BlockDecomposition":
        if len(self.blocks) != len(self.block_edges):
            raise ValueError("every block needs its edge list")
        seen: set[int] = set()
        for position, block in enumerate(self.bfs_order):
            parent = self.parents[block]
            if position == 0 and parent is not None:
                raise ValueError("the root block has no parent")
            if position > 0 and parent not in seen:
                raise ValueError(f"block {block} appears before its parent")
            seen.add(block)
        return self

    @property
    def root(self) -> int:
        return self.bfs_order[0]

    def is_trivial(self, block: int) -> bool:
        """A trivial block is a single bridge."""
        return len(self.blocks[block]) == 2

    def blocks_at(self, vertex: int) -> tuple[int, ...]:
        """Indices of the blocks containing ``vertex``."""
        return tuple(i for i, block in enumerate(self.blocks) if vertex in block)


class Ear(BaseModel):
    """An open ear ``u, internal..., v`` attached at ``u`` and ``v``."""

    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    internal: tuple[int, ...] = ()

    @property
    def path(self) -> tuple[int, ...]:
        return (self.u, *self.internal, self.v)

    @property
    def length(self) -> int:
        """Number of edges on the ear."""
        return len(self.internal) + 1

    @property
    def edges(self) -> tuple[Edge, ...]:
        path = self.path
        return tuple(normalize_edge(a, b) for a, b in zip(path, path[1:], strict=False))


class EarDecomposition(BaseModel):
    """A base cycle followed by ears, each attached to what was built before it."""

    model_config = ConfigDict(frozen=True)

    base_cycle: tuple[int, ...]
    ears: tuple[Ear, ...] = ()

    @field_validator("base_cycle")
    @classmethod
    def check_cycle_length(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(v) < 3 or len(set(v)) != len(v):
            raise ValueError("base cycle needs at least 3 distinct vertices")
        return v

    @property
    def cycle_edges(self) -> tuple[Edge, ...]:
        cycle = self.base_cycle
        return tuple(normalize_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))

    def all_edges(self) -> set[Edge]:
        edges = set(self.cycle_edges)
        for ear in self.ears:
            edges.update(ear.edges)
        return edges

    def vertices(self) -> set[int]:
        found = set(self.base_cycle)
        for ear in self.ears:
            found.update(ear.internal)
        return found
