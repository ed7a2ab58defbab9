"""Total colorings and path witnesses."""

from collections.abc import Mapping, Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .graph import Edge, Graph, normalize_edge


class ConnectionMode(str, Enum):
    """Which path conditions a connectivity check applies.

    ``tpc`` uses all three total proper conditions, ``pc`` only compares
    consecutive edge colors and ``pvc`` only compares consecutive internal
    vertex colors.
    """

    TPC = "tpc"
    PC = "pc"
    PVC = "pvc"


class TotalColoring(BaseModel):
    """A positive-integer color on every vertex and every edge of ``host``.

    ``edge_colors[i]`` is the color of ``host.edges[i]``.
    """

    model_config = ConfigDict(frozen=True)

    host: Graph
    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]

    @model_validator(mode="after")
    def check_complete(self) -> "TotalColoring":
        if len(self.vertex_colors) != self.host.n:
            raise ValueError(f"expected {self.host.n} vertex colors, got {len(self.vertex_colors)}")
        if len(self.edge_colors) != self.host.m:
            raise ValueError(f"expected {self.host.m} edge colors, got {len(self.edge_colors)}")
        for v, color in enumerate(self.vertex_colors):
            if color < 1:
                raise ValueError(f"vertex {v} has color {color}; colors start at 1")
        for (u, v), color in zip(self.host.edges, self.edge_colors, strict=True):
            if color < 1:
                raise ValueError(f"edge ({u}, {v}) has color {color}; colors start at 1")
        return self

    @classmethod
    def uniform(cls, host: Graph, color: int = 1) -> "TotalColoring":
        """Every element gets the same color."""
        return cls(host=host, vertex_colors=(color,) * host.n, edge_colors=(color,) * host.m)

    @classmethod
    def from_maps(
        cls,
        host: Graph,
        vertex_colors: Mapping[int, int],
        edge_colors: Mapping[Edge, int],
    ) -> "TotalColoring":
        """Build from per-element maps; edge keys may use either endpoint order."""
        edges = {normalize_edge(*e): c for e, c in edge_colors.items()}
        missing_v = [v for v in range(host.n) if v not in vertex_colors]
        if missing_v:
            raise ValueError(f"vertex {missing_v[0]} has no color")
        missing_e = [e for e in host.edges if e not in edges]
        if missing_e:
            raise ValueError(f"edge {missing_e[0]} has no color")
        return cls(
            host=host,
            vertex_colors=tuple(vertex_colors[v] for v in range(host.n)),
            edge_colors=tuple(edges[e] for e in host.edges),
        )

    def vertex_color(self, v: int) -> int:
        return self.vertex_colors[v]

    def edge_color(self, u: int, v: int) -> int:
        return self.edge_colors[self.host.edge_id(u, v)]

    @property
    def palette(self) -> tuple[int, ...]:
        """Distinct colors used across vertices and edges, ascending."""
        return tuple(sorted(set(self.vertex_colors) | set(self.edge_colors)))

    @property
    def color_count(self) -> int:
        return len(set(self.vertex_colors) | set(self.edge_colors))

    def mode_color_count(self, mode: ConnectionMode) -> int:
        """Colors that matter for ``mode``: edges only for pc, vertices only for pvc."""
        if mode is ConnectionMode.PC:
            return len(set(self.edge_colors))
        if mode is ConnectionMode.PVC:
            return len(set(self.vertex_colors))
        return self.color_count

    def recolored(self, mapping: Mapping[int, int]) -> "TotalColoring":
        """Apply a palette map to every element; colors missing from ``mapping`` stay."""
        return TotalColoring(
            host=self.host,
            vertex_colors=tuple(mapping.get(c, c) for c in self.vertex_colors),
            edge_colors=tuple(mapping.get(c, c) for c in self.edge_colors),
        )


class PathWitness(BaseModel):
    """A sequence of distinct vertices; adjacency is checked against a host graph."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @field_validator("vertices")
    @classmethod
    def check_vertices(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v:
            raise ValueError("a path has at least one vertex")
        if len(set(v)) != len(v):
            raise ValueError(f"path {list(v)} repeats a vertex")
        return v

    @classmethod
    def of(cls, vertices: Sequence[int]) -> "PathWitness":
        return cls(vertices=tuple(vertices))

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        """Number of edges on the path."""
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(normalize_edge(a, b) for a, b in zip(vs, vs[1:], strict=False))

    def reversed(self) -> "PathWitness":
        return PathWitness(vertices=self.vertices[::-1])

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


class ColoringMethod(str, Enum):
    """Named coloring constructions exposed on the command line."""

    COMPLETE = "complete"
    TREE = "tree"
    CYCLE = "cycle"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    TWO_CONNECTED = "two_connected"
    GENERAL = "general"
    MIN_DEGREE = "min_degree"
    TRACEABLE = "traceable"
    PHASE = "phase"
