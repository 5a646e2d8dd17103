"""Bounded exhaustive search for representations of small graphs.

Given a graph, a bend budget, and a grid window, the search decides
whether the graph has a representation with every path inside the
window and at most the budgeted bends.  Candidate paths are
enumerated once (deduplicated under traversal reversal, since a path
and its reverse are the same geometric object), their pairwise
edge-sharing relation is packed into bitmasks, and vertices are
placed by backtracking in descending-degree order with forward
pruning: assigning a path intersects the domains of all later
vertices with the set of candidates that do (or do not) share an edge
with it, as adjacency requires.

Because representations translate freely, searching a fixed window
decides exactly the question "is there a placement whose bounding box
fits the window".  The anchored variant pins the first path's bounding
box corner at the origin and lets the window float, which must reach
the same verdicts; it exists to cross-check the plain search and is
exercised by the tests on small graphs.

Outcomes are explicit: ``FOUND`` carries a re-validated
representation, ``EXHAUSTED`` means the whole space was ruled out
within budget, ``NODE_LIMIT`` means the node ceiling stopped the
search first and nothing was decided.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .analysis import validate
from .core import Graph, GridPath, GridPoint, Representation


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted-within-budget"
    NODE_LIMIT = "node-limit-hit"


@dataclass(frozen=True, slots=True)
class SearchBudget:
    """Search limits.  ``grid_cols``/``grid_rows`` count grid points
    per dimension, so a 6x6 budget allows spans of five unit edges."""

    max_bends: int
    grid_cols: int
    grid_rows: int
    monotonic: bool = False
    node_limit: int | None = None

    def __post_init__(self) -> None:
        if self.max_bends < 0:
            raise ValueError("max_bends must be non-negative")
        if self.grid_cols < 1 or self.grid_rows < 1:
            raise ValueError("grid dimensions must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive when given")


@dataclass
class SearchResult:
    status: SearchStatus
    representation: Representation | None
    nodes: int


class InconclusiveSearchError(RuntimeError):
    """A bend-number query hit the node limit before deciding a level."""

    def __init__(self, k: int, nodes: int):
        self.k = k
        self.nodes = nodes
        super().__init__(f"node limit hit at bend budget {k} after {nodes} nodes")


@dataclass(frozen=True, slots=True)
class _Candidate:
    points: tuple[GridPoint, ...]
    edges: frozenset[tuple[int, int, int]]
    bbox: tuple[int, int, int, int]  # min col, max col, min row, max row


def _enumerate_paths(
    col_lo: int,
    col_hi: int,
    row_lo: int,
    row_hi: int,
    max_bends: int,
    monotonic: bool,
) -> list[_Candidate]:
    """All canonical paths within the window, one per geometric path."""
    if monotonic:
        directions = [(1, 0), (0, 1)]
    else:
        directions = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    out: list[_Candidate] = []
    points: list[GridPoint] = []
    visited: set[GridPoint] = set()
    edges: list[tuple[int, int, int]] = []

    def edge_key(p: GridPoint, q: GridPoint) -> tuple[int, int, int]:
        if p.row == q.row:
            return (min(p.col, q.col), p.row, 0)
        return (p.col, min(p.row, q.row), 1)

    def record() -> None:
        pts = tuple(points)
        if monotonic or pts <= tuple(reversed(pts)):
            lo_c = min(p.col for p in pts)
            hi_c = max(p.col for p in pts)
            lo_r = min(p.row for p in pts)
            hi_r = max(p.row for p in pts)
            out.append(_Candidate(pts, frozenset(edges), (lo_c, hi_c, lo_r, hi_r)))

    def grow(last_axis: int | None, segments_left: int) -> None:
        pos = points[-1]
        for dc, dr in directions:
            axis = 0 if dr == 0 else 1
            if axis == last_axis:
                continue
            steps: list[GridPoint] = []
            cur = pos
            while True:
                nxt = GridPoint(cur.col + dc, cur.row + dr)
                if not (col_lo <= nxt.col <= col_hi and row_lo <= nxt.row <= row_hi):
                    break
                if nxt in visited:
                    break
                steps.append(nxt)
                visited.add(nxt)
                edges.append(edge_key(cur, nxt))
                points.append(nxt)
                record()
                if segments_left > 1:
                    grow(axis, segments_left - 1)
                points.pop()
                cur = nxt
            for p in steps:
                visited.remove(p)
            del edges[len(edges) - len(steps):]

    for row in range(row_lo, row_hi + 1):
        for col in range(col_lo, col_hi + 1):
            start = GridPoint(col, row)
            points.append(start)
            visited.add(start)
            grow(None, max_bends + 1)
            visited.remove(start)
            points.pop()
    return out


def _intersection_masks(candidates: list[_Candidate]) -> list[int]:
    n = len(candidates)
    masks = [0] * n
    for i in range(n):
        ei = candidates[i].edges
        masks[i] |= 1 << i
        for j in range(i + 1, n):
            if not ei.isdisjoint(candidates[j].edges):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


class _NodeLimit(Exception):
    pass


def find_representation(
    graph: Graph, budget: SearchBudget, anchor_first: bool = False
) -> SearchResult:
    """Search the window for a representation of the graph.

    With ``anchor_first`` the first placed path has its bounding-box
    corner pinned to the origin and the other paths live in a window
    mirrored around it, constrained to a common bounding box of the
    budgeted size; outcomes agree with the plain search.
    """
    if not graph.vertices:
        return SearchResult(SearchStatus.FOUND, Representation({}), 0)

    w, h = budget.grid_cols - 1, budget.grid_rows - 1
    if anchor_first:
        candidates = _enumerate_paths(-w, w, -h, h, budget.max_bends, budget.monotonic)
        first_domain = 0
        for i, c in enumerate(candidates):
            if c.bbox[0] == 0 and c.bbox[2] == 0 and c.bbox[1] <= w and c.bbox[3] <= h:
                first_domain |= 1 << i
    else:
        candidates = _enumerate_paths(0, w, 0, h, budget.max_bends, budget.monotonic)
        first_domain = (1 << len(candidates)) - 1

    n = len(candidates)
    if n == 0 or first_domain == 0:
        return SearchResult(SearchStatus.EXHAUSTED, None, 0)
    masks = _intersection_masks(candidates)
    full = (1 << n) - 1

    order = sorted(graph.vertices, key=lambda v: (-graph.degree(v), v))
    index = {v: i for i, v in enumerate(order)}
    adjacent = [
        {index[u] for u in graph.neighbors(v) if index[u] > index[v]} for v in order
    ]
    chosen: list[int] = [0] * len(order)
    nodes = 0

    def backtrack(level: int, domains: list[int], bbox: tuple[int, int, int, int] | None) -> bool:
        nonlocal nodes
        if level == len(order):
            return True
        domain = domains[level]
        while domain:
            bit = domain & -domain
            domain ^= bit
            ci = bit.bit_length() - 1
            nodes += 1
            if budget.node_limit is not None and nodes > budget.node_limit:
                raise _NodeLimit
            cand = candidates[ci]
            if bbox is not None:
                merged = (
                    min(bbox[0], cand.bbox[0]),
                    max(bbox[1], cand.bbox[1]),
                    min(bbox[2], cand.bbox[2]),
                    max(bbox[3], cand.bbox[3]),
                )
                if merged[1] - merged[0] > w or merged[3] - merged[2] > h:
                    continue
            else:
                merged = None
            new_domains = list(domains)
            feasible = True
            for m in range(level + 1, len(order)):
                if m in adjacent[level]:
                    new_domains[m] &= masks[ci]
                else:
                    new_domains[m] &= full ^ masks[ci]
                if new_domains[m] == 0:
                    feasible = False
                    break
            if feasible:
                chosen[level] = ci
                if backtrack(level + 1, new_domains, merged):
                    return True
        return False

    domains = [full] * len(order)
    domains[0] = first_domain
    try:
        found = backtrack(0, domains, (0, 0, 0, 0) if anchor_first else None)
    except _NodeLimit:
        return SearchResult(SearchStatus.NODE_LIMIT, None, nodes)

    if not found:
        return SearchResult(SearchStatus.EXHAUSTED, None, nodes)

    rep = Representation(
        {order[i]: GridPath(candidates[chosen[i]].points) for i in range(len(order))}
    )
    report = validate(rep, graph, max_bends=budget.max_bends, monotonic=budget.monotonic)
    if not report.ok:
        raise RuntimeError(f"search produced an invalid representation: {report.to_doc()}")
    return SearchResult(SearchStatus.FOUND, rep, nodes)


def bend_number_upto(
    graph: Graph,
    max_k: int,
    grid_cols: int,
    grid_rows: int,
    monotonic: bool = False,
    node_limit: int | None = None,
) -> int | None:
    """Smallest bend budget k <= max_k representable in the window.

    Returns None when every level is exhaustively ruled out.  Raises
    ``InconclusiveSearchError`` when a level hits the node limit, since
    no minimal k can then be certified.
    """
    for k in range(max_k + 1):
        budget = SearchBudget(k, grid_cols, grid_rows, monotonic, node_limit)
        result = find_representation(graph, budget)
        if result.status is SearchStatus.FOUND:
            return k
        if result.status is SearchStatus.NODE_LIMIT:
            raise InconclusiveSearchError(k, result.nodes)
    return None
