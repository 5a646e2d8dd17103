"""Rewriting one-bend representations into monotonic three-bend form.

The pipeline turns any representation with at most one bend per path
into one where every path is monotonic with at most three bends and
the derived graph is unchanged.  It works in four steps:

1. refuse input that is not in one-bend form (``NotB1Error``);
2. normalize: scale by 3 and pull path endpoints back by one unit
   wherever they touch a foreign collinear segment end-to-end, which
   removes every endpoint point-touch without changing the derived
   graph (shared runs are at least three units long after scaling,
   and retraction shaves at most one unit per side);
3. refuse input whose remaining collinear point-touches, necessarily
   bend-to-bend, join non-adjacent paths (``ConflictError``): such a
   touch cannot be separated by this construction;
4. rebuild each path from two translated copies of the layout.  With
   s = number of paths + 1, the normalized layout is scaled by s (so
   every original line lands on a multiple of s) and a second copy is
   shifted beyond the first in both directions.  For the vertex with
   index i in sorted label order, the horizontal segment is kept in
   the first copy but shortened on the right by i+1 units, the
   vertical segment is kept in the second copy and extended downward
   by i+1 units, and a fresh riser and run connect the two ends.
   Offsets never reach s, so inserted lines are distinct from all
   original lines and from each other, shortening leaves at least one
   unit of every shared run, and extensions cannot bridge the gaps
   the normalization created.

Every output path is monotonic; a path with one bend gains exactly
two more, a bend-free path keeps zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    Orientation,
    Segment,
    derived_graph,
    segments,
    validate,
)
from .core import (
    GridPath,
    GridPoint,
    Representation,
    canonicalize_path,
    scale_path,
)


class NotB1Error(ValueError):
    """The input representation is not in one-bend form."""


@dataclass(frozen=True, slots=True)
class Conflict:
    """A collinear point-touch between two non-adjacent paths."""

    a: str
    b: str
    point: GridPoint
    orientation: Orientation

    def to_doc(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "point": [self.point.col, self.point.row],
            "orientation": self.orientation.value,
        }


class ConflictError(ValueError):
    """Non-adjacent paths touch collinearly; no safe rewrite exists."""

    def __init__(self, conflicts: list[Conflict]):
        self.conflicts = conflicts
        head = ", ".join(
            f"{c.a}/{c.b} at {c.point} on the {c.orientation.value}" for c in conflicts[:3]
        )
        more = "" if len(conflicts) <= 3 else f" and {len(conflicts) - 3} more"
        super().__init__(f"{len(conflicts)} collinear point-touch(es): {head}{more}")


@dataclass(frozen=True)
class LineAssignment:
    """The fresh grid lines claimed per vertex by the rewrite.

    ``columns[v]`` is the column of v's riser (the new right end of
    its horizontal segment); ``rows[v]`` is the row of v's connector
    run (the new lower end of its vertical segment).  Vertices whose
    path lacks the corresponding segment are absent.  For bend-free
    paths the recorded line is the trimmed or extended end of the
    single segment; no riser or run is built on it.  Within each
    orientation all recorded lines are pairwise distinct.
    """

    columns: dict[str, int]
    rows: dict[str, int]

    def to_doc(self) -> dict:
        return {"columns": dict(sorted(self.columns.items())),
                "rows": dict(sorted(self.rows.items()))}


@dataclass
class TransformResult:
    representation: Representation
    lines: LineAssignment


def _segments_by_line(rep: Representation) -> dict[tuple[Orientation, int], list[Segment]]:
    by_line: dict[tuple[Orientation, int], list[Segment]] = {}
    for label in sorted(rep.paths):
        for seg in segments(rep.paths[label], label):
            by_line.setdefault((seg.orientation, seg.line), []).append(seg)
    return by_line


def check_collinear_separation(rep: Representation) -> list[Conflict]:
    """All collinear point-touches between non-adjacent paths.

    A touch is a pair of segments on one grid line sharing exactly one
    grid point (one segment ends where the other starts).  Touches
    between adjacent paths are fine, they share an edge elsewhere;
    the returned ones are the obstructions the rewrite cannot fix.
    """
    adjacent = derived_graph(rep).edges
    conflicts: set[Conflict] = set()
    for (orient, line), segs in _segments_by_line(rep).items():
        starts: dict[int, list[Segment]] = {}
        ends: dict[int, list[Segment]] = {}
        for s in segs:
            starts.setdefault(s.lo, []).append(s)
            ends.setdefault(s.hi, []).append(s)
        for coord, enders in ends.items():
            for t in starts.get(coord, []):
                for s in enders:
                    if s.owner == t.owner:
                        continue
                    pair = (s.owner, t.owner) if s.owner < t.owner else (t.owner, s.owner)
                    if pair in adjacent:
                        continue
                    point = (
                        GridPoint(coord, line)
                        if orient is Orientation.HORIZONTAL
                        else GridPoint(line, coord)
                    )
                    conflicts.add(Conflict(pair[0], pair[1], point, orient))
    return sorted(
        conflicts, key=lambda c: (c.a, c.b, c.point.col, c.point.row, c.orientation.value)
    )


def normalize(rep: Representation) -> Representation:
    """Scale by 3 and retract endpoint touches.

    Wherever a path endpoint meets a foreign collinear segment
    end-to-end, the endpoint is pulled back one unit.  Scaling first
    guarantees that every shared run is at least three units long, so
    the retractions (at most one unit per run end) never disconnect an
    adjacent pair: the derived graph is unchanged.  Bend counts and
    monotonicity are also unchanged.
    """
    scaled = Representation(
        {label: scale_path(path, 3) for label, path in rep.paths.items()}
    )
    starts: dict[tuple[Orientation, int], dict[int, set[str]]] = {}
    ends: dict[tuple[Orientation, int], dict[int, set[str]]] = {}
    for key, segs in _segments_by_line(scaled).items():
        starts[key] = {}
        ends[key] = {}
        for s in segs:
            starts[key].setdefault(s.lo, set()).add(s.owner)
            ends[key].setdefault(s.hi, set()).add(s.owner)

    out: dict[str, GridPath] = {}
    for label, path in scaled.items():
        pts = list(path.points)
        for at, towards in ((0, 1), (len(pts) - 1, len(pts) - 2)):
            p, q = pts[at], pts[towards]
            if p.row == q.row:
                key = (Orientation.HORIZONTAL, p.row)
                pos, inward = p.col, (1 if q.col > p.col else -1)
            else:
                key = (Orientation.VERTICAL, p.col)
                pos, inward = p.row, (1 if q.row > p.row else -1)
            # Our endpoint is the low end of its segment when the path
            # heads inward to larger coordinates; the complementary
            # foreign end is then a segment ending here, and vice versa.
            table = ends[key] if inward > 0 else starts[key]
            if any(owner != label for owner in table.get(pos, ())):
                pts[at] = (
                    GridPoint(p.col + inward, p.row)
                    if p.row == q.row
                    else GridPoint(p.col, p.row + inward)
                )
        out[label] = canonicalize_path(pts)
    return Representation(out)


def b1_to_b3m(rep: Representation) -> TransformResult:
    """Rewrite a one-bend representation into monotonic three-bend form.

    Raises ``NotB1Error`` if a path is malformed or has more than one
    bend, and ``ConflictError`` if non-adjacent paths touch collinearly
    after normalization.  The result's derived graph equals the
    input's, every output path is monotonic with at most three bends,
    and the result is re-validated before being returned.
    """
    if not rep.paths:
        return TransformResult(Representation({}), LineAssignment({}, {}))

    graph = derived_graph(rep)
    base = validate(rep, graph, max_bends=1)
    if not base.ok:
        raise NotB1Error(
            f"malformed paths: {list(base.malformed_paths)}, "
            f"max bends seen: {base.max_bends}"
        )

    norm = normalize(rep)
    conflicts = check_collinear_separation(norm)
    if conflicts:
        raise ConflictError(conflicts)

    s = len(rep.paths) + 1
    scaled = {label: scale_path(path, s) for label, path in norm.paths.items()}
    cols = [p.col for path in scaled.values() for p in path.points]
    rows = [p.row for path in scaled.values() for p in path.points]
    off_x = max(cols) - min(cols) + s + 1
    off_y = max(rows) - min(rows) + s + 1

    columns: dict[str, int] = {}
    assigned_rows: dict[str, int] = {}
    out: dict[str, GridPath] = {}
    for idx, label in enumerate(sorted(scaled)):
        off = idx + 1
        segs = segments(scaled[label], label)
        horiz = next((sg for sg in segs if sg.horizontal), None)
        vert = next((sg for sg in segs if not sg.horizontal), None)
        if horiz is not None:
            columns[label] = horiz.hi - off
        if vert is not None:
            assigned_rows[label] = vert.lo + off_y - off
        if horiz is not None and vert is not None:
            pts = [
                (horiz.lo, horiz.line),
                (columns[label], horiz.line),
                (columns[label], assigned_rows[label]),
                (vert.line + off_x, assigned_rows[label]),
                (vert.line + off_x, vert.hi + off_y),
            ]
        elif horiz is not None:
            pts = [(horiz.lo, horiz.line), (columns[label], horiz.line)]
        else:
            assert vert is not None
            pts = [
                (vert.line + off_x, assigned_rows[label]),
                (vert.line + off_x, vert.hi + off_y),
            ]
        out[label] = canonicalize_path(pts)

    result = Representation(out)
    final = validate(result, graph, max_bends=3, monotonic=True)
    if not final.ok:
        raise RuntimeError(
            f"rewrite produced an invalid representation: {final.to_doc()}"
        )
    return TransformResult(result, LineAssignment(columns, assigned_rows))
