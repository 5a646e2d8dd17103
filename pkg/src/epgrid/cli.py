"""Command-line interface and renderers.

Subcommands mirror the library: ``construct`` emits catalogue graphs
and representations as JSON documents, ``validate`` checks a
representation against a graph, ``analyze`` reports per-path
statistics, ``bounds`` evaluates the exact inequalities, ``transform``
runs the one-bend to monotonic three-bend rewrite, ``search`` runs the
bounded exhaustive search, and ``render`` draws a representation as
SVG or ASCII art.

Exit codes: 0 on success, 1 when input fails validation, 2 on usage
errors, 3 when a request is structurally impossible (collinear
conflicts, unsupported witness sizes, oversized ASCII canvases).

The ASCII renderer doubles the grid so that both lattice points and
the unit edges between them get a character cell: an edge used by one
path prints ``-`` or ``|``, an edge shared by several paths prints
``*``, and a lattice point prints ``-``, ``|`` or ``+`` according to
the orientations of the edges meeting it.  The SVG renderer nudges
every path by a small per-path offset (under half a cell) so that
paths sharing a grid line remain individually visible; pass
``--no-offset`` for exact geometry.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from .analysis import (
    DomainMismatchError,
    IntersectingInputError,
    bend_count,
    count_acp,
    derived_graph,
    is_monotonic,
    segments,
    validate,
)
from .core import (
    DocumentError,
    Graph,
    Representation,
    dump_document,
    edge_keys,
    graph_from_doc,
    graph_to_doc,
    representation_from_doc,
    representation_to_doc,
)
from .constructions import fig2_fixture, h1_b2_representation, h1_graph, h2_gadget, kmn_monotonic, star_b0
from .search import SearchBudget, SearchStatus, find_representation
from .transform import ConflictError, NotB1Error, b1_to_b3m, check_collinear_separation, normalize


class TooLargeError(ValueError):
    """The representation exceeds the ASCII canvas limits."""


@dataclass(frozen=True)
class RenderOptions:
    cell_size: int = 24
    offset_collinear: bool = True
    labels: bool = False

    def __post_init__(self) -> None:
        if self.cell_size < 4:
            raise ValueError("cell_size must be at least 4")


_ASCII_MAX_COLS = 200
_ASCII_MAX_ROWS = 60


def render_ascii(rep: Representation, options: RenderOptions = RenderOptions()) -> str:
    """Plain-text drawing of a representation on the doubled grid."""
    if not rep.paths:
        return ""
    lo, hi = rep.extent()
    width, height = hi.col - lo.col, hi.row - lo.row
    if width > _ASCII_MAX_COLS or height > _ASCII_MAX_ROWS:
        raise TooLargeError(
            f"extent {width}x{height} exceeds {_ASCII_MAX_COLS}x{_ASCII_MAX_ROWS}"
        )
    canvas = [[" "] * (2 * width + 1) for _ in range(2 * height + 1)]
    point_orients: dict[tuple[int, int], set[str]] = {}
    edge_owners: dict[tuple[int, int, int], set[str]] = {}
    for label in sorted(rep.paths):
        for key in edge_keys(rep.paths[label]):
            edge_owners.setdefault(key, set()).add(label)
            c, r, axis = key
            if axis == 0:
                point_orients.setdefault((c, r), set()).add("h")
                point_orients.setdefault((c + 1, r), set()).add("h")
            else:
                point_orients.setdefault((c, r), set()).add("v")
                point_orients.setdefault((c, r + 1), set()).add("v")

    def cell(c: int, r: int) -> tuple[int, int]:
        return 2 * (c - lo.col), 2 * (hi.row - r)

    for (c, r), orients in point_orients.items():
        x, y = cell(c, r)
        canvas[y][x] = "+" if len(orients) == 2 else ("-" if "h" in orients else "|")
    for (c, r, axis), owners in edge_owners.items():
        x, y = cell(c, r)
        if axis == 0:
            x += 1
        else:
            y -= 1
        canvas[y][x] = "*" if len(owners) > 1 else ("-" if axis == 0 else "|")

    if options.labels:
        for label in sorted(rep.paths):
            x, y = cell(rep.paths[label].start.col, rep.paths[label].start.row)
            for ch in label:
                if x >= len(canvas[0]):
                    break
                canvas[y][x] = ch
                x += 1
    return "\n".join("".join(row).rstrip() for row in canvas)


_PALETTE = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#e377c2", "#8c564b", "#bcbd22", "#7f7f7f",
]


def render_svg(rep: Representation, options: RenderOptions = RenderOptions()) -> str:
    """Standalone SVG drawing, deterministic for a given input."""
    cell = options.cell_size
    margin = cell
    if not rep.paths:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" '
            'viewBox="0 0 {0} {0}"></svg>\n'.format(2 * margin)
        )
    lo, hi = rep.extent()
    width = 2 * margin + (hi.col - lo.col) * cell
    height = 2 * margin + (hi.row - lo.row) * cell

    def fmt(v: float) -> str:
        return f"{v:.2f}".rstrip("0").rstrip(".")

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for c in range(lo.col, hi.col + 1):
        x = margin + (c - lo.col) * cell
        lines.append(
            f'<line x1="{x}" y1="{margin}" x2="{x}" y2="{height - margin}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
    for r in range(lo.row, hi.row + 1):
        y = margin + (hi.row - r) * cell
        lines.append(
            f'<line x1="{margin}" y1="{y}" x2="{width - margin}" y2="{y}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
    for i, label in enumerate(sorted(rep.paths)):
        jitter = ((i % 7) - 3) * cell * 0.05 if options.offset_collinear else 0.0
        color = _PALETTE[i % len(_PALETTE)]
        pts = [
            (
                margin + (p.col - lo.col) * cell + jitter,
                margin + (hi.row - p.row) * cell + jitter,
            )
            for p in rep.paths[label].points
        ]
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
        lines.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{fmt(cell / 6)}" stroke-linecap="round" '
            f'stroke-linejoin="round" opacity="0.85"/>'
        )
        if options.labels:
            lines.append(
                f'<text x="{fmt(pts[0][0] + cell * 0.15)}" y="{fmt(pts[0][1] - cell * 0.15)}" '
                f'font-family="monospace" font-size="{fmt(cell * 0.5)}" '
                f'fill="{color}">{label}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ======================================================================
# Command-line plumbing
# ======================================================================


def _read_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON: {exc}") from None


def _load_graph(path: str) -> Graph:
    doc = _read_json(path)
    if isinstance(doc, dict) and "graph" in doc:
        doc = doc["graph"]
    return graph_from_doc(doc)


def _load_rep(path: str) -> Representation:
    doc = _read_json(path)
    if isinstance(doc, dict) and "representation" in doc:
        doc = doc["representation"]
    return representation_from_doc(doc)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        cols_s, rows_s = text.lower().split("x", 1)
        cols, rows = int(cols_s), int(rows_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 6x6, got {text!r}") from None
    if cols < 1 or rows < 1:
        raise argparse.ArgumentTypeError("grid dimensions must be positive")
    return cols, rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epgrid",
        description="Grid-path representations: construct, validate, bound, transform, search, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a catalogue graph/representation")
    p.add_argument("what", choices=["star", "kmn", "fig2", "h2", "h1"])
    p.add_argument("--m", type=int, help="rows for kmn")
    p.add_argument("--n", type=int, help="leaves for star, columns for kmn")
    p.add_argument("--u", default="u", help="first hub label for h2")
    p.add_argument("--v", default="v", help="second hub label for h2")
    p.add_argument("--prefix", default="", help="label prefix for h2 cycle vertices")
    p.add_argument("--with-rep", action="store_true", help="include the representation for h1")
    p.add_argument("-o", "--output", help="write the document here instead of stdout")

    p = sub.add_parser("validate", help="check a representation against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--max-bends", type=int)
    p.add_argument("--monotonic", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("analyze", help="per-path statistics and interaction counts")
    p.add_argument("--rep", required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("bounds", help="evaluate an exact inequality or verdict")
    p.add_argument(
        "which",
        choices=["lbl1", "lbl", "acp", "mlbl", "mlbl2", "threshold", "heldt", "verdict"],
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--crossings", type=int)
    p.add_argument("--alignments", type=int)
    p.add_argument("--pseudocrossings", type=int)
    p.add_argument("--monotonic", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("transform", help="one-bend to monotonic three-bend rewrite")
    p.add_argument("--rep", required=True)
    p.add_argument("--normalize", action="store_true", help="stop after normalization")
    p.add_argument("--check-only", action="store_true", help="report collinear conflicts only")
    p.add_argument("-o", "--output")

    p = sub.add_parser("search", help="bounded exhaustive search for a representation")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-bends", type=int, required=True)
    p.add_argument("--grid", type=_parse_grid, required=True, metavar="WxH")
    p.add_argument("--monotonic", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("-o", "--output")

    p = sub.add_parser("render", help="draw a representation")
    p.add_argument("format", choices=["svg", "ascii"])
    p.add_argument("--rep", required=True)
    p.add_argument("--cell-size", type=int, default=24)
    p.add_argument("--no-offset", action="store_true", help="disable per-path jitter in SVG")
    p.add_argument("--labels", action="store_true")
    p.add_argument("-o", "--output")

    return parser


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.what == "star":
        if args.n is None:
            raise _Usage("construct star needs --n")
        g, rep = star_b0(args.n)
    elif args.what == "kmn":
        if args.m is None or args.n is None:
            raise _Usage("construct kmn needs --m and --n")
        g, rep = kmn_monotonic(args.m, args.n)
    elif args.what == "fig2":
        g, rep = fig2_fixture()
    elif args.what == "h2":
        g, rep = h2_gadget(args.u, args.v, args.prefix), None
    else:
        g = h1_graph()
        rep = h1_b2_representation() if args.with_rep else None
    doc: dict = {"graph": graph_to_doc(g)}
    if rep is not None:
        doc["representation"] = representation_to_doc(rep)
    _emit(dump_document(doc), args.output)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep)
    report = validate(rep, g, max_bends=args.max_bends, monotonic=args.monotonic)
    _emit(dump_document(report.to_doc()), args.output)
    return 0 if report.ok else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    per_path = {}
    for label in sorted(rep.paths):
        path = rep.paths[label]
        per_path[label] = {
            "bends": bend_count(path),
            "monotonic": is_monotonic(path),
            "segments": len(segments(path, label)),
        }
    doc: dict = {
        "paths": per_path,
        "max_bends": max((d["bends"] for d in per_path.values()), default=0),
        "all_monotonic": all(d["monotonic"] for d in per_path.values()),
        "derived_edges": len(derived_graph(rep).edges),
    }
    try:
        acp = count_acp(rep.paths)
        doc["acp"] = {
            "alignments": acp.alignments,
            "crossings": acp.crossings,
            "pseudocrossings": acp.pseudocrossings,
        }
    except IntersectingInputError:
        doc["acp"] = None
    _emit(dump_document(doc), args.output)
    return 0


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise _Usage(f"bounds {args.which} needs --{name}")
        values.append(value)
    return values


def _cmd_bounds(args: argparse.Namespace) -> int:
    which = args.which
    if which == "lbl1":
        n, k = _need(args, "n", "k")
        doc = bounds_mod.lbl1(args.m, n, k).to_doc()
    elif which == "lbl":
        n, k, c = _need(args, "n", "k", "crossings")
        doc = bounds_mod.lbl_crossings(args.m, n, k, c).to_doc()
    elif which == "acp":
        n, k, a, c, p = _need(args, "n", "k", "alignments", "crossings", "pseudocrossings")
        doc = bounds_mod.acp_lower(args.m, n, k, a, c, p).to_doc()
    elif which == "mlbl":
        n, k = _need(args, "n", "k")
        doc = bounds_mod.mlbl(args.m, n, k).to_doc()
    elif which == "mlbl2":
        n, k = _need(args, "n", "k")
        doc = bounds_mod.mlbl2(args.m, n, k).to_doc()
    elif which == "threshold":
        doc = {"m": args.m, "threshold": str(bounds_mod.threshold_b2m3(args.m))}
    elif which == "heldt":
        doc = {"m": args.m, "n": bounds_mod.heldt_n(args.m)}
    else:
        n, k = _need(args, "n", "k")
        status = bounds_mod.verdict(args.m, n, k, monotonic=args.monotonic)
        doc = status.to_doc()
    _emit(dump_document(doc), args.output)
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    if args.normalize:
        rep = normalize(rep)
    if args.check_only:
        conflicts = check_collinear_separation(rep)
        _emit(dump_document({"conflicts": [c.to_doc() for c in conflicts]}), args.output)
        return 0 if not conflicts else 3
    if args.normalize:
        _emit(dump_document(representation_to_doc(rep)), args.output)
        return 0
    result = b1_to_b3m(rep)
    doc = {
        "representation": representation_to_doc(result.representation),
        "lines": result.lines.to_doc(),
    }
    _emit(dump_document(doc), args.output)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cols, rows = args.grid
    budget = SearchBudget(
        max_bends=args.max_bends,
        grid_cols=cols,
        grid_rows=rows,
        monotonic=args.monotonic,
        node_limit=args.node_limit,
    )
    result = find_representation(g, budget)
    doc: dict = {"status": result.status.value, "nodes": result.nodes}
    doc["representation"] = (
        representation_to_doc(result.representation)
        if result.representation is not None
        else None
    )
    _emit(dump_document(doc), args.output)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    rep = _load_rep(args.rep)
    options = RenderOptions(
        cell_size=args.cell_size,
        offset_collinear=not args.no_offset,
        labels=args.labels,
    )
    if args.format == "svg":
        _emit(render_svg(rep, options), args.output)
    else:
        _emit(render_ascii(rep, options) + "\n", args.output)
    return 0


class _Usage(Exception):
    pass


_COMMANDS = {
    "construct": _cmd_construct,
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "bounds": _cmd_bounds,
    "transform": _cmd_transform,
    "search": _cmd_search,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConflictError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.stdout.write(dump_document({"conflicts": [c.to_doc() for c in exc.conflicts]}))
        return 3
    except (bounds_mod.UnsupportedMError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DocumentError, DomainMismatchError, NotB1Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (bounds_mod.RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
