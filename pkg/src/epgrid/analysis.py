"""Segment structure, pairwise interaction counts, and validation.

Every grid path decomposes into maximal straight runs, its segments.
Two paths are adjacent in the derived graph exactly when they share a
unit grid edge; everything else here is bookkeeping on top of that
notion.  Segment pairs from different paths fall into exactly one of
five classes:

* alignment: same grid line, no common edge;
* collinear overlap: same grid line, at least one common edge;
* parallel disjoint lines: parallel, different lines;
* crossing: perpendicular, with a grid point interior to both;
* pseudocrossing: perpendicular and not a crossing.

The definitions are literal.  Aligned or pseudocrossing segments may
be arbitrarily far apart; no proximity is implied.  Interior means the
span without its two extreme points, so a path ending on another
segment's line never crosses it there.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .core import (
    GridPath,
    GridPoint,
    Graph,
    Representation,
    PathError,
    canonicalize_path,
    edge_keys,
)


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class PairClass(Enum):
    ALIGNMENT = "alignment"
    CROSSING = "crossing"
    PSEUDOCROSSING = "pseudocrossing"
    COLLINEAR_OVERLAP = "collinear-overlap"
    PARALLEL_DISJOINT_LINES = "parallel-disjoint-lines"


class SameOwnerError(ValueError):
    """Segment pair classification needs segments of distinct paths."""


class IntersectingInputError(ValueError):
    """An operation requiring pairwise non-intersecting paths got two
    paths with a common grid edge."""


class TooManyBendsError(ValueError):
    """A path exceeds the bend budget of the requested check."""


class DomainMismatchError(ValueError):
    """Representation labels and graph vertices disagree."""


@dataclass(frozen=True, slots=True)
class Segment:
    """A maximal straight run of a path.

    ``line`` is the row of a horizontal segment or the column of a
    vertical one; ``lo``/``hi`` bound the varying coordinate.  ``index``
    is the position of the segment along its path in traversal order.
    """

    owner: str
    index: int
    orientation: Orientation
    line: int
    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo

    @property
    def horizontal(self) -> bool:
        return self.orientation is Orientation.HORIZONTAL

    def points(self) -> tuple[GridPoint, ...]:
        if self.horizontal:
            return tuple(GridPoint(c, self.line) for c in range(self.lo, self.hi + 1))
        return tuple(GridPoint(self.line, r) for r in range(self.lo, self.hi + 1))

    def interior(self) -> frozenset[GridPoint]:
        """Span points excluding both extreme points."""
        if self.horizontal:
            return frozenset(GridPoint(c, self.line) for c in range(self.lo + 1, self.hi))
        return frozenset(GridPoint(self.line, r) for r in range(self.lo + 1, self.hi))


def segments(path: GridPath, owner: str = "") -> list[Segment]:
    """The maximal straight runs of a canonical path, in order."""
    out: list[Segment] = []
    for i, (p, q) in enumerate(zip(path.points, path.points[1:])):
        if p.row == q.row:
            lo, hi = sorted((p.col, q.col))
            out.append(Segment(owner, i, Orientation.HORIZONTAL, p.row, lo, hi))
        else:
            lo, hi = sorted((p.row, q.row))
            out.append(Segment(owner, i, Orientation.VERTICAL, p.col, lo, hi))
    return out


def bend_count(path: GridPath) -> int:
    """Number of bends of a canonical path."""
    return max(len(path.points) - 2, 0)


def is_monotonic(path: GridPath) -> bool:
    """True when some traversal is non-decreasing in both coordinates."""
    dirs = set()
    for p, q in zip(path.points, path.points[1:]):
        dirs.add(((q.col > p.col) - (q.col < p.col), (q.row > p.row) - (q.row < p.row)))
    return dirs <= {(1, 0), (0, 1)} or dirs <= {(-1, 0), (0, -1)}


def paths_intersect(p: GridPath, q: GridPath) -> bool:
    """True when the two paths share at least one unit grid edge."""
    return not set(edge_keys(p)).isdisjoint(edge_keys(q))


def classify_pair(s: Segment, t: Segment) -> PairClass:
    """The interaction class of two segments of distinct paths."""
    if s.owner == t.owner:
        raise SameOwnerError(f"both segments belong to {s.owner!r}")
    if s.orientation is t.orientation:
        if s.line != t.line:
            return PairClass.PARALLEL_DISJOINT_LINES
        if min(s.hi, t.hi) > max(s.lo, t.lo):
            return PairClass.COLLINEAR_OVERLAP
        return PairClass.ALIGNMENT
    h, v = (s, t) if s.horizontal else (t, s)
    if h.lo < v.line < h.hi and v.lo < h.line < v.hi:
        return PairClass.CROSSING
    return PairClass.PSEUDOCROSSING


@dataclass(frozen=True, slots=True)
class AcpCounts:
    alignments: int
    crossings: int
    pseudocrossings: int


def count_acp(paths: Mapping[str, GridPath]) -> AcpCounts:
    """Alignment/crossing/pseudocrossing totals over all pairs.

    Counts segment pairs (S1, S2) with S1, S2 from distinct paths of
    the family.  The paths must be pairwise non-intersecting; a shared
    grid edge raises ``IntersectingInputError``.
    """
    labelled = [(label, segments(path, label)) for label, path in sorted(paths.items())]
    for i, (la, _) in enumerate(labelled):
        for lb, _ in labelled[i + 1:]:
            if paths_intersect(paths[la], paths[lb]):
                raise IntersectingInputError(f"paths {la!r} and {lb!r} share a grid edge")
    a = c = p = 0
    for i, (_, segs1) in enumerate(labelled):
        for _, segs2 in labelled[i + 1:]:
            for s in segs1:
                for t in segs2:
                    cls = classify_pair(s, t)
                    if cls is PairClass.ALIGNMENT:
                        a += 1
                    elif cls is PairClass.CROSSING:
                        c += 1
                    elif cls is PairClass.PSEUDOCROSSING:
                        p += 1
    return AcpCounts(a, c, p)


def start_orientation(path: GridPath) -> Orientation:
    """Orientation of the first segment under a fixed traversal.

    Monotonic paths are read ascending (both coordinates
    non-decreasing); all others from their lexicographically smaller
    endpoint.  This makes the answer a function of the geometric path,
    not of the stored point order.
    """
    pts = path.points
    if is_monotonic(path):
        ascending = pts[0].col <= pts[-1].col and pts[0].row <= pts[-1].row
        first, second = (pts[0], pts[1]) if ascending else (pts[-1], pts[-2])
    else:
        forward = min(pts[0], pts[-1]) == pts[0]
        first, second = (pts[0], pts[1]) if forward else (pts[-1], pts[-2])
    return Orientation.HORIZONTAL if first.row == second.row else Orientation.VERTICAL


@dataclass(frozen=True, slots=True)
class PairBoundsReport:
    """Exact pair counts against the per-pair inequalities.

    ``c_plus_p_bound`` is 2*floor((k+1)/2)*ceil((k+1)/2), plus
    (ceil-floor)^2 when the paths start with different orientations.
    ``a_plus_c_bound`` applies only when both paths are monotonic:
    k+1 for different start orientations, k for equal ones.  With
    k = 0 the equal-orientation variant is not a theorem (two aligned
    bend-free paths exceed it); callers probing that corner should
    expect ``a_plus_c_ok`` to be False there.
    """

    k: int
    same_start: bool
    both_monotonic: bool
    alignments: int
    crossings: int
    pseudocrossings: int
    c_plus_p_bound: int
    c_plus_p_ok: bool
    a_plus_c_bound: int | None
    a_plus_c_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.c_plus_p_ok and (self.a_plus_c_ok is not False)


def check_pair_bounds(p1: GridPath, p2: GridPath, k: int) -> PairBoundsReport:
    """Evaluate the per-pair interaction bounds for a bend budget k.

    The paths must not intersect (``IntersectingInputError``) and each
    must have at most k bends (``TooManyBendsError``).
    """
    if k < 0:
        raise ValueError("bend budget must be non-negative")
    b1, b2 = bend_count(p1), bend_count(p2)
    if b1 > k or b2 > k:
        raise TooManyBendsError(f"paths have {b1} and {b2} bends, budget is {k}")
    if paths_intersect(p1, p2):
        raise IntersectingInputError("paths share a grid edge")

    a = c = p = 0
    for s in segments(p1, "1"):
        for t in segments(p2, "2"):
            cls = classify_pair(s, t)
            if cls is PairClass.ALIGNMENT:
                a += 1
            elif cls is PairClass.CROSSING:
                c += 1
            elif cls is PairClass.PSEUDOCROSSING:
                p += 1

    same_start = start_orientation(p1) is start_orientation(p2)
    fl, ce = (k + 1) // 2, (k + 2) // 2
    cp_bound = 2 * fl * ce + (0 if same_start else (ce - fl) ** 2)
    both_mono = is_monotonic(p1) and is_monotonic(p2)
    ac_bound = (k if same_start else k + 1) if both_mono else None
    return PairBoundsReport(
        k=k,
        same_start=same_start,
        both_monotonic=both_mono,
        alignments=a,
        crossings=c,
        pseudocrossings=p,
        c_plus_p_bound=cp_bound,
        c_plus_p_ok=c + p <= cp_bound,
        a_plus_c_bound=ac_bound,
        a_plus_c_ok=(a + c <= ac_bound) if ac_bound is not None else None,
    )


# ======================================================================
# Derived graphs and validation
# ======================================================================


def derived_graph(rep: Representation) -> Graph:
    """The intersection graph of the representation's paths.

    Vertices are the path labels in sorted order; two labels are
    adjacent when their paths share a unit grid edge.  Edges are found
    by hashing unit edges, not by comparing all path pairs.
    """
    owners: dict[tuple[int, int, int], list[str]] = {}
    for label in sorted(rep.paths):
        for key in edge_keys(rep.paths[label]):
            owners.setdefault(key, []).append(label)
    adjacent: set[tuple[str, str]] = set()
    for sharers in owners.values():
        if len(sharers) > 1:
            for i, u in enumerate(sharers):
                for v in sharers[i + 1:]:
                    if u != v:
                        adjacent.add((u, v) if u < v else (v, u))
    return Graph.build(sorted(rep.paths), adjacent)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a representation against a host graph.

    ``malformed_paths`` lists labels whose stored paths violate the
    per-path invariants; those paths are excluded from the edge
    analysis.  ``max_bends`` is the largest bend count among the
    well-formed paths (0 for an empty representation).
    ``nonmonotonic_vertices`` is always populated; it only affects
    ``ok`` when monotonicity was required.
    """

    ok: bool
    missing_edges: tuple[tuple[str, str], ...]
    spurious_edges: tuple[tuple[str, str], ...]
    max_bends: int
    nonmonotonic_vertices: tuple[str, ...]
    malformed_paths: tuple[str, ...]

    def to_doc(self) -> dict:
        return {
            "ok": self.ok,
            "missing_edges": [list(e) for e in self.missing_edges],
            "spurious_edges": [list(e) for e in self.spurious_edges],
            "max_bends": self.max_bends,
            "nonmonotonic_vertices": list(self.nonmonotonic_vertices),
            "malformed_paths": list(self.malformed_paths),
        }


def validate(
    rep: Representation,
    graph: Graph,
    max_bends: int | None = None,
    monotonic: bool = False,
) -> ValidationReport:
    """Check that a representation realizes exactly the given graph.

    The label set must equal the vertex set (``DomainMismatchError``).
    The report is ``ok`` when no edges are missing or spurious, no path
    is malformed, every path respects ``max_bends`` (when given), and
    every path is monotonic (when requested).
    """
    if set(rep.paths) != set(graph.vertices):
        only_rep = sorted(set(rep.paths) - set(graph.vertices))
        only_graph = sorted(set(graph.vertices) - set(rep.paths))
        raise DomainMismatchError(
            f"labels only in representation: {only_rep}, only in graph: {only_graph}"
        )

    malformed: list[str] = []
    wellformed: dict[str, GridPath] = {}
    for label in sorted(rep.paths):
        path = rep.paths[label]
        try:
            if canonicalize_path(path.points) != path:
                raise PathError("not in canonical form")
        except PathError:
            malformed.append(label)
            continue
        wellformed[label] = path

    realized = derived_graph(Representation(wellformed)).edges
    expected = {e for e in graph.edges if e[0] in wellformed and e[1] in wellformed}
    missing = tuple(sorted(expected - realized))
    spurious = tuple(sorted(realized - expected))

    worst = max((bend_count(p) for p in wellformed.values()), default=0)
    nonmono = tuple(sorted(l for l, p in wellformed.items() if not is_monotonic(p)))

    ok = (
        not missing
        and not spurious
        and not malformed
        and (max_bends is None or worst <= max_bends)
        and (not monotonic or not nonmono)
    )
    return ValidationReport(ok, missing, spurious, worst, nonmono, tuple(malformed))
