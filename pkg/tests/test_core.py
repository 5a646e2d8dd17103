"""Path canonicalization, graphs, and the JSON interchange format."""

from __future__ import annotations

import random

import pytest

from epgrid.core import (
    DiagonalStepError,
    DocumentError,
    EmptyOrDegenerateError,
    Graph,
    GraphError,
    GridEdge,
    GridPoint,
    Representation,
    SelfIntersectingError,
    canonicalize_path,
    dump_graph,
    dump_representation,
    edge_keys,
    graph_to_doc,
    load_graph,
    load_representation,
    path_edges,
    reverse_path,
    scale_path,
    translate_path,
)


def coords(path):
    return [(p.col, p.row) for p in path.points]


# ----------------------------------------------------------------------
# canonicalize_path
# ----------------------------------------------------------------------


def test_canonicalize_straight_path():
    path = canonicalize_path([(0, 0), (3, 0)])
    assert coords(path) == [(0, 0), (3, 0)]


def test_canonicalize_merges_collinear_waypoints():
    path = canonicalize_path([(0, 0), (1, 0), (2, 0), (2, 3)])
    assert coords(path) == [(0, 0), (2, 0), (2, 3)]


def test_canonicalize_drops_repeated_points():
    path = canonicalize_path([(0, 0), (0, 0), (2, 0), (2, 0), (2, 1)])
    assert coords(path) == [(0, 0), (2, 0), (2, 1)]


def test_canonicalize_keeps_genuine_bends():
    zigzag = [(0, 0), (2, 0), (2, 2), (4, 2), (4, 0)]
    assert coords(canonicalize_path(zigzag)) == zigzag


def test_canonicalize_rejects_short_input():
    with pytest.raises(EmptyOrDegenerateError):
        canonicalize_path([])
    with pytest.raises(EmptyOrDegenerateError):
        canonicalize_path([(1, 1)])
    with pytest.raises(EmptyOrDegenerateError):
        canonicalize_path([(1, 1), (1, 1), (1, 1)])


def test_canonicalize_rejects_diagonal_step():
    with pytest.raises(DiagonalStepError):
        canonicalize_path([(0, 0), (1, 1)])


def test_canonicalize_rejects_point_revisit():
    # A closed rectangle comes back to its starting point.
    with pytest.raises(SelfIntersectingError):
        canonicalize_path([(0, 0), (2, 0), (2, 2), (0, 2), (0, 0)])


def test_canonicalize_rejects_backtracking_on_a_line():
    # Reversing direction on the same line revisits the previous edge's
    # interior points, so the expansion check must catch it.
    with pytest.raises(SelfIntersectingError):
        canonicalize_path([(0, 0), (3, 0), (1, 0)])


def test_canonicalize_rejects_crossing_itself():
    with pytest.raises(SelfIntersectingError):
        canonicalize_path([(0, 1), (3, 1), (3, 2), (1, 2), (1, 0)])


def test_canonicalize_preserves_direction():
    fwd = canonicalize_path([(0, 0), (2, 0), (2, 1)])
    bwd = canonicalize_path([(2, 1), (2, 0), (0, 0)])
    assert fwd != bwd
    assert reverse_path(fwd) == bwd


# ----------------------------------------------------------------------
# edge expansion and geometric operations
# ----------------------------------------------------------------------


def test_path_edges_of_an_l_shape():
    path = canonicalize_path([(0, 0), (2, 0), (2, 2)])
    edges = path_edges(path)
    assert len(edges) == 4
    assert edges[0] == GridEdge.between(GridPoint(0, 0), GridPoint(1, 0))
    assert edges[-1] == GridEdge.between(GridPoint(2, 1), GridPoint(2, 2))


def test_edge_keys_match_path_edges():
    path = canonicalize_path([(1, 5), (4, 5), (4, 2), (6, 2)])
    keys = set(edge_keys(path))
    assert len(keys) == len(path_edges(path)) == 8
    for edge in path_edges(path):
        axis = 0 if edge.horizontal else 1
        assert (edge.a.col, edge.a.row, axis) in keys


def test_edge_keys_are_direction_independent():
    path = canonicalize_path([(3, 1), (0, 1), (0, 4)])
    assert set(edge_keys(path)) == set(edge_keys(reverse_path(path)))


def test_grid_edge_between_orders_endpoints():
    e = GridEdge.between(GridPoint(2, 2), GridPoint(1, 2))
    assert (e.a, e.b) == (GridPoint(1, 2), GridPoint(2, 2))
    assert e.horizontal
    with pytest.raises(ValueError):
        GridEdge.between(GridPoint(0, 0), GridPoint(2, 0))


def test_reverse_is_an_involution():
    path = canonicalize_path([(0, 0), (0, 3), (2, 3), (2, 5)])
    assert reverse_path(reverse_path(path)) == path


def test_translate_and_scale():
    path = canonicalize_path([(0, 0), (1, 0), (1, 2)])
    moved = translate_path(path, 10, -3)
    assert coords(moved) == [(10, -3), (11, -3), (11, -1)]
    grown = scale_path(path, 3)
    assert coords(grown) == [(0, 0), (3, 0), (3, 6)]
    assert len(path_edges(grown)) == 3 * len(path_edges(path))
    with pytest.raises(ValueError):
        scale_path(path, 0)


# ----------------------------------------------------------------------
# graphs
# ----------------------------------------------------------------------


def test_graph_build_normalizes_edges():
    g = Graph.build(["a", "b", "c"], [("b", "a"), ("a", "b"), ("b", "c")])
    assert g.edges == frozenset({("a", "b"), ("b", "c")})
    assert g.has_edge("a", "b") and g.has_edge("b", "a")
    assert not g.has_edge("a", "c")
    assert g.neighbors("b") == frozenset({"a", "c"})
    assert g.degree("b") == 2 and g.degree("c") == 1


def test_graph_build_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.build(["a", "a"], [])
    with pytest.raises(GraphError):
        Graph.build(["a"], [("a", "a")])
    with pytest.raises(GraphError):
        Graph.build(["a"], [("a", "b")])


def test_graph_vertex_order_is_preserved():
    g = Graph.build(["z", "m", "a"], [])
    assert g.vertices == ("z", "m", "a")


# ----------------------------------------------------------------------
# documents
# ----------------------------------------------------------------------


def test_graph_document_round_trip_is_byte_identical():
    g = Graph.build(["a", "b", "c"], [("c", "a"), ("a", "b")])
    text = dump_graph(g)
    assert text.endswith("\n") and "\n" not in text[:-1]
    assert dump_graph(load_graph(text)) == text


def test_graph_doc_sorts_edges():
    g = Graph.build(["x", "w", "v"], [("x", "w"), ("w", "v"), ("x", "v")])
    doc = graph_to_doc(g)
    assert doc["edges"] == [["v", "w"], ["v", "x"], ["w", "x"]]


def test_representation_document_round_trip():
    rep = Representation.from_coords(
        {"b": [(0, 0), (2, 0)], "a": [(0, 1), (0, 3), (1, 3)]}
    )
    text = dump_representation(rep)
    again = load_representation(text)
    assert dump_representation(again) == text
    assert again.labels() == ["a", "b"]


def test_random_documents_round_trip():
    rng = random.Random(20240817)
    for _ in range(25):
        paths = {}
        for i in range(rng.randint(1, 5)):
            c, r = rng.randint(-20, 20), rng.randint(-20, 20)
            pts = [(c, r)]
            for _ in range(rng.randint(1, 4)):
                if rng.random() < 0.5:
                    c += rng.choice([-3, -2, -1, 1, 2, 3])
                else:
                    r += rng.choice([-3, -2, -1, 1, 2, 3])
                pts.append((c, r))
            try:
                canonicalize_path(pts)
            except Exception:
                continue
            paths[f"v{i}"] = pts
        if not paths:
            continue
        rep = Representation.from_coords(paths)
        text = dump_representation(rep)
        assert dump_representation(load_representation(text)) == text


def test_load_graph_rejects_malformed_documents():
    for bad in (
        "[]",
        '{"vertices": ["a"]}',
        '{"vertices": "a", "edges": []}',
        '{"vertices": ["a", "b"], "edges": [["a"]]}',
        '{"vertices": ["a", "b"], "edges": [["a", "c"]]}',
        "not json",
    ):
        with pytest.raises(DocumentError):
            load_graph(bad)


def test_load_representation_rejects_malformed_documents():
    for bad in (
        "[]",
        '{"paths": []}',
        '{"paths": {"a": [[0, 0], [1]]}}',
        '{"paths": {"a": [[0, 0], [1, 1]]}}',
        '{"paths": {"a": [[0, 0], [0.5, 0]]}}',
        '{"paths": {"a": [[0, 0]]}}',
    ):
        with pytest.raises(DocumentError):
            load_representation(bad)


def test_extent():
    rep = Representation.from_coords({"a": [(-1, 2), (4, 2)], "b": [(0, 0), (0, 7)]})
    lo, hi = rep.extent()
    assert (lo.col, lo.row) == (-1, 0)
    assert (hi.col, hi.row) == (4, 7)
    with pytest.raises(ValueError):
        Representation({}).extent()
