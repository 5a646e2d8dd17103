"""Grid paths, host graphs, and their interchange format.

The objects here model EPG representations: every vertex of a graph is
assigned a path on the rectangular grid, and two vertices are adjacent
exactly when their paths share at least one unit-length grid edge.
Sharing a grid point alone never creates adjacency.

A path is stored by its waypoints: the two endpoints plus every bend,
in traversal order.  Consecutive waypoints must differ in exactly one
coordinate, so each pair spans a horizontal or vertical run of unit
edges.  The canonical form keeps no three collinear waypoints (every
interior waypoint is a genuine bend) and requires the walk to be
vertex-simple once expanded to unit steps.  ``canonicalize_path`` is
the validating constructor; ``GridPath`` itself stores whatever it is
given, which lets diagnostic code represent malformed input.

Documents use a small JSON vocabulary:

* graph: ``{"vertices": [...], "edges": [["a", "b"], ...]}``
* representation: ``{"paths": {"a": [[col, row], ...], ...}}``

Serialization is canonical (sorted edge lists, sorted path labels,
no insignificant whitespace) so that parse followed by serialize is a
byte-identical round trip on canonical input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class PathError(ValueError):
    """A point sequence does not describe a usable grid path."""


class EmptyOrDegenerateError(PathError):
    """Fewer than two points, or all points coincide."""


class DiagonalStepError(PathError):
    """Two consecutive points differ in both coordinates."""


class SelfIntersectingError(PathError):
    """The unit-step expansion of the walk revisits a grid point."""


class GraphError(ValueError):
    """A vertex/edge listing does not describe a simple graph."""


class DocumentError(ValueError):
    """A JSON document does not match the expected schema."""


@dataclass(frozen=True, order=True, slots=True)
class GridPoint:
    """A lattice point, ordered lexicographically by (col, row)."""

    col: int
    row: int

    def __str__(self) -> str:
        return f"({self.col},{self.row})"


@dataclass(frozen=True, slots=True)
class GridEdge:
    """A unit-length grid edge between two adjacent lattice points.

    Endpoints are kept in lexicographic order, so two GridEdge values
    compare equal exactly when they cover the same unit edge.
    """

    a: GridPoint
    b: GridPoint

    @staticmethod
    def between(p: GridPoint, q: GridPoint) -> "GridEdge":
        if abs(p.col - q.col) + abs(p.row - q.row) != 1:
            raise ValueError(f"points {p} and {q} are not grid-adjacent")
        return GridEdge(p, q) if p < q else GridEdge(q, p)

    @property
    def horizontal(self) -> bool:
        return self.a.row == self.b.row

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True, slots=True)
class GridPath:
    """A walk on the grid given by its waypoints.

    The constructor performs no validation.  Use ``canonicalize_path``
    to build a checked, canonical path from raw coordinates.
    """

    points: tuple[GridPoint, ...]

    def __iter__(self) -> Iterator[GridPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def start(self) -> GridPoint:
        return self.points[0]

    @property
    def end(self) -> GridPoint:
        return self.points[-1]


def canonicalize_path(points: Iterable[tuple[int, int] | GridPoint]) -> GridPath:
    """Validate raw waypoints and return the canonical ``GridPath``.

    Repeated consecutive points are dropped and runs of collinear
    waypoints headed the same way are merged, so the result has a bend
    at every interior waypoint.  Traversal direction is preserved; a
    path and its reverse are distinct values.

    Raises ``EmptyOrDegenerateError``, ``DiagonalStepError`` or
    ``SelfIntersectingError`` when no canonical form exists.
    """
    pts = [p if isinstance(p, GridPoint) else GridPoint(int(p[0]), int(p[1])) for p in points]
    if len(pts) < 2:
        raise EmptyOrDegenerateError("a path needs at least two points")

    deduped: list[GridPoint] = [pts[0]]
    for p in pts[1:]:
        if p != deduped[-1]:
            deduped.append(p)
    if len(deduped) < 2:
        raise EmptyOrDegenerateError("all points coincide")

    for p, q in zip(deduped, deduped[1:]):
        if p.col != q.col and p.row != q.row:
            raise DiagonalStepError(f"step {p} -> {q} changes both coordinates")

    # Merge consecutive steps that continue in the same direction.  A
    # reversal on the same line is left alone here; the expansion check
    # below rejects it as a revisit.
    merged: list[GridPoint] = [deduped[0]]
    for q in deduped[1:]:
        if len(merged) >= 2:
            p_prev, p_last = merged[-2], merged[-1]
            d_old = (_sign(p_last.col - p_prev.col), _sign(p_last.row - p_prev.row))
            d_new = (_sign(q.col - p_last.col), _sign(q.row - p_last.row))
            if d_old == d_new:
                merged[-1] = q
                continue
        merged.append(q)

    seen: set[GridPoint] = {merged[0]}
    for p, q in zip(merged, merged[1:]):
        for step in _unit_points(p, q):
            if step in seen:
                raise SelfIntersectingError(f"walk revisits {step}")
            seen.add(step)

    return GridPath(tuple(merged))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _unit_points(p: GridPoint, q: GridPoint) -> Iterator[GridPoint]:
    """Lattice points strictly after p on the straight run p -> q."""
    dc, dr = _sign(q.col - p.col), _sign(q.row - p.row)
    c, r = p.col, p.row
    while (c, r) != (q.col, q.row):
        c += dc
        r += dr
        yield GridPoint(c, r)


def path_edges(path: GridPath) -> list[GridEdge]:
    """All unit edges of the path, in traversal order."""
    edges: list[GridEdge] = []
    for p, q in zip(path.points, path.points[1:]):
        prev = p
        for nxt in _unit_points(p, q):
            edges.append(GridEdge.between(prev, nxt))
            prev = nxt
    return edges


def edge_keys(path: GridPath) -> Iterator[tuple[int, int, int]]:
    """Compact unit-edge keys ``(col, row, axis)`` for hashing.

    ``axis`` is 0 for the horizontal edge (col,row)-(col+1,row) and 1
    for the vertical edge (col,row)-(col,row+1).  This avoids building
    GridEdge objects in bulk operations over large representations.
    """
    for p, q in zip(path.points, path.points[1:]):
        if p.row == q.row:
            lo, hi = sorted((p.col, q.col))
            for c in range(lo, hi):
                yield (c, p.row, 0)
        else:
            lo, hi = sorted((p.row, q.row))
            for r in range(lo, hi):
                yield (p.col, r, 1)


def reverse_path(path: GridPath) -> GridPath:
    """The same walk traversed from the other endpoint."""
    return GridPath(tuple(reversed(path.points)))


def translate_path(path: GridPath, dc: int, dr: int) -> GridPath:
    return GridPath(tuple(GridPoint(p.col + dc, p.row + dr) for p in path.points))


def scale_path(path: GridPath, factor: int) -> GridPath:
    if factor < 1:
        raise ValueError("scale factor must be a positive integer")
    return GridPath(tuple(GridPoint(p.col * factor, p.row * factor) for p in path.points))


# ======================================================================
# Host graphs
# ======================================================================


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with string-labelled vertices.

    Vertex order is meaningful and preserved; edges are an unordered
    set of two-element pairs.  Loops and unknown endpoints are
    rejected, duplicate edges are collapsed.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    _adjacency: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex labels")
        known = set(vs)
        es: set[tuple[str, str]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u!r}")
            if u not in known or v not in known:
                raise GraphError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            es.add((u, v) if u < v else (v, u))
        return Graph(vs, frozenset(es))

    def __post_init__(self) -> None:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adjacency", {v: frozenset(ns) for v, ns in adj.items()})

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adjacency[v]

    def degree(self, v: str) -> int:
        return len(self._adjacency[v])


@dataclass
class Representation:
    """An assignment of one grid path to each vertex label."""

    paths: dict[str, GridPath]

    def labels(self) -> list[str]:
        return list(self.paths)

    def items(self) -> Iterable[tuple[str, GridPath]]:
        return self.paths.items()

    def __getitem__(self, label: str) -> GridPath:
        return self.paths[label]

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, label: str) -> bool:
        return label in self.paths

    @staticmethod
    def from_coords(raw: Mapping[str, Iterable[tuple[int, int]]]) -> "Representation":
        return Representation({label: canonicalize_path(pts) for label, pts in raw.items()})

    def extent(self) -> tuple[GridPoint, GridPoint]:
        """Bounding box as (min corner, max corner)."""
        pts = [p for path in self.paths.values() for p in path.points]
        if not pts:
            raise ValueError("empty representation has no extent")
        return (
            GridPoint(min(p.col for p in pts), min(p.row for p in pts)),
            GridPoint(max(p.col for p in pts), max(p.row for p in pts)),
        )


# ======================================================================
# Documents
# ======================================================================


def graph_to_doc(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": sorted([u, v] for u, v in g.edges),
    }


def graph_from_doc(doc: object) -> Graph:
    if not isinstance(doc, dict):
        raise DocumentError("graph document must be an object")
    try:
        vertices = doc["vertices"]
        edges = doc["edges"]
    except KeyError as missing:
        raise DocumentError(f"graph document lacks key {missing}") from None
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise DocumentError("vertices must be a list of strings")
    if not isinstance(edges, list):
        raise DocumentError("edges must be a list of pairs")
    pairs: list[tuple[str, str]] = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise DocumentError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph.build(vertices, pairs)
    except GraphError as exc:
        raise DocumentError(str(exc)) from None


def representation_to_doc(rep: Representation) -> dict:
    return {
        "paths": {
            label: [[p.col, p.row] for p in rep.paths[label].points]
            for label in sorted(rep.paths)
        }
    }


def representation_from_doc(doc: object) -> Representation:
    if not isinstance(doc, dict):
        raise DocumentError("representation document must be an object")
    paths = doc.get("paths")
    if not isinstance(paths, dict):
        raise DocumentError("representation document needs a 'paths' object")
    out: dict[str, GridPath] = {}
    for label, pts in paths.items():
        if not isinstance(label, str):
            raise DocumentError("path labels must be strings")
        if not (isinstance(pts, list) and all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in pts
        )):
            raise DocumentError(f"path {label!r} must be a list of [col, row] pairs")
        try:
            out[label] = canonicalize_path([(p[0], p[1]) for p in pts])
        except PathError as exc:
            raise DocumentError(f"path {label!r}: {exc}") from None
    return Representation(out)


def dump_document(doc: dict) -> str:
    """Canonical single-line JSON with a trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def dump_graph(g: Graph) -> str:
    return dump_document(graph_to_doc(g))


def load_graph(text: str) -> Graph:
    return graph_from_doc(_parse_json(text))


def dump_representation(rep: Representation) -> str:
    return dump_document(representation_to_doc(rep))


def load_representation(text: str) -> Representation:
    return representation_from_doc(_parse_json(text))


def _parse_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
