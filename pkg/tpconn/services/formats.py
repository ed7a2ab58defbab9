"""Text formats for graphs and colorings.

Graph files start with ``n m`` followed by ``m`` lines ``u v``. Coloring files
hold ``v <id> <color>`` and ``e <u> <v> <color>`` lines in any order. Lines
starting with ``#`` are comments; ``# landmark <name> <vertex>`` comments
name vertices of interest.
"""

import logging
from typing import TextIO

from pydantic import ValidationError

from ..errors import ColoringFormatError, GraphFormatError
from ..models.coloring import TotalColoring
from ..models.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)

LANDMARK_PREFIX = "# landmark "


def _read(text: str | TextIO) -> str:
    return text if isinstance(text, str) else text.read()


def _int(token: str, lineno: int, error: type[ValueError]) -> int:
    try:
        return int(token)
    except ValueError:
        raise error(f"line {lineno}: '{token}' is not an integer")


def parse_graph_with_landmarks(text: str | TextIO) -> tuple[Graph, dict[str, int]]:
    """Parse a graph file and the landmark comments it carries."""
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    landmarks: dict[str, int] = {}
    landmark_lines: dict[str, int] = {}

    for lineno, raw in enumerate(_read(text).splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(LANDMARK_PREFIX):
                parts = line[len(LANDMARK_PREFIX) :].split()
                if len(parts) != 2:
                    raise GraphFormatError(f"line {lineno}: expected '# landmark <name> <vertex>'")
                landmarks[parts[0]] = _int(parts[1], lineno, GraphFormatError)
                landmark_lines[parts[0]] = lineno
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got '{line}'")
        a, b = (_int(t, lineno, GraphFormatError) for t in tokens)

        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(f"line {lineno}: vertex and edge counts must be non-negative")
            header = (a, b)
            continue

        n = header[0]
        if a == b:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1} in '{line}'")
        edge = normalize_edge(a, b)
        if edge in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {edge}, first listed on line {seen[edge]}")
        seen[edge] = lineno
        edges.append(edge)

    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(edges)} were listed")
    for name, vertex in landmarks.items():
        if not 0 <= vertex < n:
            raise GraphFormatError(f"line {landmark_lines[name]}: landmark '{name}' is outside 0..{n - 1}")

    try:
        graph = Graph.from_edges(n, edges)
    except ValidationError as e:
        raise GraphFormatError(str(e))
    return graph, landmarks


def parse_graph(text: str | TextIO) -> Graph:
    """Parse the edge-list graph format."""
    graph, _ = parse_graph_with_landmarks(text)
    return graph


def serialize_graph(g: Graph, landmarks: dict[str, int] | None = None) -> str:
    """Canonical text form: landmarks first, then header, then edges in order."""
    lines = [f"{LANDMARK_PREFIX}{name} {vertex}" for name, vertex in (landmarks or {}).items()]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def serialize_coloring(c: TotalColoring) -> str:
    """Canonical text form: all vertices ascending, then edges in lexicographic order."""
    lines = [f"v {v} {color}" for v, color in enumerate(c.vertex_colors)]
    lines.extend(f"e {u} {v} {color}" for (u, v), color in zip(c.host.edges, c.edge_colors, strict=True))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str | TextIO, g: Graph) -> TotalColoring:
    """Parse a coloring of ``g``; every vertex and edge must be colored exactly once."""
    vertex_colors: dict[int, int] = {}
    edge_colors: dict[Edge, int] = {}

    for lineno, raw in enumerate(_read(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "v" and len(tokens) == 3:
            v, color = (_int(t, lineno, ColoringFormatError) for t in tokens[1:])
            if not 0 <= v < g.n:
                raise ColoringFormatError(f"line {lineno}: unknown vertex {v}")
            if v in vertex_colors:
                raise ColoringFormatError(f"line {lineno}: vertex {v} colored twice")
            target: dict = vertex_colors
            key: int | Edge = v
        elif kind == "e" and len(tokens) == 4:
            a, b, color = (_int(t, lineno, ColoringFormatError) for t in tokens[1:])
            edge = normalize_edge(a, b)
            if edge not in g.edge_index:
                raise ColoringFormatError(f"line {lineno}: unknown edge ({a}, {b})")
            if edge in edge_colors:
                raise ColoringFormatError(f"line {lineno}: edge {edge} colored twice")
            target = edge_colors
            key = edge
        else:
            raise ColoringFormatError(f"line {lineno}: expected 'v <id> <color>' or 'e <u> <v> <color>'")
        if color < 1:
            raise ColoringFormatError(f"line {lineno}: color {color} is not a positive integer")
        target[key] = color

    for v in range(g.n):
        if v not in vertex_colors:
            raise ColoringFormatError(f"vertex {v} is uncolored")
    for edge in g.edges:
        if edge not in edge_colors:
            raise ColoringFormatError(f"edge ({edge[0]}, {edge[1]}) is uncolored")

    logger.debug(f"Parsed coloring of {g.n} vertices and {g.m} edges")
    return TotalColoring.from_maps(g, vertex_colors, edge_colors)
