"""Reference graphs and representations with known bend demands.

The catalogue covers three kinds of objects:

* easy families with optimal representations: stars with straight
  paths and complete bipartite graphs K_{m,n} with monotonic
  staircase paths of 2m-2 bends;
* a hand-sized fixture of seven vertices realizable with one bend per
  path, used to exercise validation and the transform;
* a two-level amplifier graph built from 2401 copies of an
  eight-vertex gadget, together with an explicit representation using
  two bends per path.  The gadget ``h2_gadget`` consists of a 6-cycle
  c1..c6 with chords c1-c4 and c3-c6 plus two hub vertices adjacent
  to all six cycle vertices (but not to each other); its role is to
  force bends near the hubs.

All constructions are deterministic and self-certifying: tests verify
them by validating against their intended graphs, not by trusting the
builder.
"""

from __future__ import annotations

from .core import Graph, Representation, canonicalize_path


def star_b0(n: int) -> tuple[Graph, Representation]:
    """K_{1,n} with bend-free paths on a single grid row.

    The center spans the whole row; leaf i covers the single unit
    edge from column i-1 to i.  For n = 1 the two paths coincide,
    which is legitimate: the pair shares an edge and is adjacent.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    vertices = ["a1"] + [f"b{i}" for i in range(1, n + 1)]
    edges = [("a1", f"b{i}") for i in range(1, n + 1)]
    coords: dict[str, list[tuple[int, int]]] = {"a1": [(0, 0), (n, 0)]}
    for i in range(1, n + 1):
        coords[f"b{i}"] = [(i - 1, 0), (i, 0)]
    return Graph.build(vertices, edges), Representation.from_coords(coords)


def kmn_monotonic(m: int, n: int) -> tuple[Graph, Representation]:
    """K_{m,n} with monotonic paths of at most 2m-2 bends.

    Side A gets m straight rows.  Side B gets n disjoint staircases,
    each climbing from row 1 to row m with one unit step per row;
    staircase j meets row i exactly on the unit edge between columns
    (j-1)m+i-1 and (j-1)m+i, so the derived graph is exactly K_{m,n}.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    vertices = [f"a{i}" for i in range(1, m + 1)] + [f"b{j}" for j in range(1, n + 1)]
    edges = [(f"a{i}", f"b{j}") for i in range(1, m + 1) for j in range(1, n + 1)]
    coords: dict[str, list[tuple[int, int]]] = {}
    for i in range(1, m + 1):
        coords[f"a{i}"] = [(0, i), (n * m, i)]
    for j in range(1, n + 1):
        base = (j - 1) * m
        pts: list[tuple[int, int]] = [(base, 1)]
        for i in range(1, m + 1):
            pts.append((base + i, i))
            if i < m:
                pts.append((base + i, i + 1))
        coords[f"b{j}"] = pts
    return Graph.build(vertices, edges), Representation.from_coords(coords)


def fig2_fixture() -> tuple[Graph, Representation]:
    """A seven-vertex graph with a one-bend representation.

    Twelve edges on vertices a..g; path f is bend-free, the rest have
    exactly one bend.  Useful as a small non-bipartite validation and
    transform fixture.
    """
    coords = {
        "a": [(1, 3), (6, 3), (6, 4)],
        "b": [(3, 5), (3, 3), (5, 3)],
        "c": [(1, 3), (3, 3), (3, 5)],
        "d": [(4, 3), (6, 3), (6, 2)],
        "e": [(3, 4), (3, 5), (6, 5)],
        "f": [(1, 3), (2, 3)],
        "g": [(6, 2), (6, 5), (5, 5)],
    }
    edges = [
        ("a", "b"), ("a", "c"), ("a", "d"), ("a", "f"), ("a", "g"),
        ("b", "c"), ("b", "d"), ("b", "e"),
        ("c", "e"), ("c", "f"),
        ("d", "g"), ("e", "g"),
    ]
    return Graph.build(sorted(coords), edges), Representation.from_coords(coords)


# ======================================================================
# The amplifier graph and its two-bend representation
# ======================================================================


def _h2_edges(u: str, v: str, cs: list[str]) -> list[tuple[str, str]]:
    c1, c2, c3, c4, c5, c6 = cs
    cycle = [(c1, c2), (c2, c3), (c3, c4), (c4, c5), (c5, c6), (c6, c1)]
    chords = [(c1, c4), (c3, c6)]
    hubs = [(u, c) for c in cs] + [(v, c) for c in cs]
    return cycle + chords + hubs


def h2_gadget(u: str = "u", v: str = "v", prefix: str = "") -> Graph:
    """The eight-vertex hub gadget on labels u, v, prefix + c1..c6."""
    cs = [f"{prefix}c{q}" for q in range(1, 7)]
    if len({u, v, *cs}) != 8:
        raise ValueError("gadget labels must be distinct")
    return Graph.build([u, v] + cs, _h2_edges(u, v, cs))


# Gadget cell geometry, in coordinates relative to the cell origin.
# The bottom hub runs along row 0 and the top hub along row _CELL_TOP
# of the enclosing layout; each c-path is a bottom run, a riser, and a
# top run with two bends.  Column offsets stay within [1, 17] so a
# cell occupies one 18-column half of a 36-column block.
_CELL_PATHS: dict[int, tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int]]] = {
    1: ((9, 0), (4, 0), (4, 1), (3, 1)),
    2: ((1, 0), (2, 0), (2, 1), (6, 1)),
    3: ((13, 0), (10, 0), (10, 1), (5, 1)),
    4: ((6, 0), (7, 0), (7, 1), (13, 1)),
    5: ((17, 0), (16, 0), (16, 1), (12, 1)),
    6: ((8, 0), (14, 0), (14, 1), (15, 1)),
}

_COLS = 50          # vertical hub paths a1..a50
_ROWS = 50          # b-paths per column pair
_BLOCK = 36         # columns between consecutive hub verticals
_V_ROW = 300        # row of the top horizontal hub


def _column_x(j: int) -> int:
    return _BLOCK * (j - 1)


def _b_row(i: int, j: int) -> int:
    # Column pairs alternate between a high and a low band so that
    # stubs meeting on a shared hub column cannot collide.
    if j % 2 == 1:
        return 296 - 2 * (i - 1)
    return 186 - 2 * (i - 1)


def h1_graph() -> Graph:
    """The amplifier graph: 16908 vertices and 53020 edges.

    Two hubs u, v are joined to fifty vertices a1..a50.  Every
    consecutive pair (a_j, a_{j+1}) is joined to fifty vertices
    b1_j..b50_j, and every vertically consecutive pair (b_i_j,
    b_{i+1}_j) hosts one copy of the eight-vertex gadget, the b-pair
    playing the hub roles.
    """
    vertices: list[str] = ["u", "v"]
    edges: list[tuple[str, str]] = []
    for j in range(1, _COLS + 1):
        vertices.append(f"a{j}")
        edges.append(("u", f"a{j}"))
        edges.append(("v", f"a{j}"))
    for j in range(1, _COLS):
        for i in range(1, _ROWS + 1):
            b = f"b{i}_{j}"
            vertices.append(b)
            edges.append((f"a{j}", b))
            edges.append((f"a{j + 1}", b))
    for j in range(1, _COLS):
        for i in range(1, _ROWS):
            cs = [f"g{i}_{j}_c{q}" for q in range(1, 7)]
            vertices.extend(cs)
            edges.extend(_h2_edges(f"b{i + 1}_{j}", f"b{i}_{j}", cs))
    return Graph.build(vertices, edges)


def h1_b2_representation() -> Representation:
    """A representation of the amplifier graph with two bends per path.

    Hubs are long horizontals on rows 0 and 300; each a_j is a riser
    on column 36(j-1) with a one-edge foot on the u-row and a one-edge
    hook on the v-row.  The b-paths run between consecutive risers
    with one-edge stubs sharing the risers; gadget cells sit strictly
    between consecutive b-rows, consecutive cells using disjoint
    column halves of their block.
    """
    right = _column_x(_COLS) + 1
    coords: dict[str, list[tuple[int, int]]] = {
        "u": [(-1, 0), (right, 0)],
        "v": [(-1, _V_ROW), (right, _V_ROW)],
    }
    for j in range(1, _COLS + 1):
        x = _column_x(j)
        coords[f"a{j}"] = [(x - 1, 0), (x, 0), (x, _V_ROW), (x + 1, _V_ROW)]
    for j in range(1, _COLS):
        x_l, x_r = _column_x(j), _column_x(j + 1)
        for i in range(1, _ROWS + 1):
            y = _b_row(i, j)
            coords[f"b{i}_{j}"] = [(x_l, y - 1), (x_l, y), (x_r, y), (x_r, y + 1)]
    for j in range(1, _COLS):
        for i in range(1, _ROWS):
            base_x = _column_x(j) + (0 if i % 2 == 1 else 18)
            y_bottom = _b_row(i + 1, j)
            y_top = _b_row(i, j)
            for q, cell in _CELL_PATHS.items():
                coords[f"g{i}_{j}_c{q}"] = [
                    (base_x + cx, y_bottom if cy == 0 else y_top) for cx, cy in cell
                ]
    return Representation(
        {label: canonicalize_path(pts) for label, pts in coords.items()}
    )
