import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from gthick.geom import (ConflictKind, GeometryError, LayeredDrawing, Orientation, Point,
                         orientation, segments_conflict, validate_layered_drawing)
from gthick.graph import Graph, build_gk, complete_graph
from gthick.layouts import theorem1_layout

from oracles import parametric_conflict

P = Point


@pytest.mark.parametrize("pts, expected", [
    (((0, 0), (1, 1), (2, 2)), Orientation.COLLINEAR),
    (((0, 0), (1, 0), (0, 1)), Orientation.CCW),
    (((0, 0), (0, 1), (1, 0)), Orientation.CW),
])
def test_orientation(pts, expected):
    assert orientation(*pts) is expected


def test_orientation_needs_no_rounding():
    big = 10 ** 30
    assert orientation((0, 0), (big, big + 1), (big + 1, big + 2)) is Orientation.CW
    assert orientation((0, 0), (big, big), (3 * big, 3 * big)) is Orientation.COLLINEAR


@pytest.mark.parametrize("a, b, shared, expected", [
    (((0, 0), (2, 2)), ((0, 2), (2, 0)), set(), ConflictKind.PROPER_CROSSING),
    (((0, 0), (1, 1)), ((1, 1), (2, 0)), {(1, 1)}, None),
    (((0, 0), (2, 0)), ((1, 0), (3, 0)), set(), ConflictKind.COLLINEAR_OVERLAP),
    (((0, 0), (2, 0)), ((1, 0), (1, 1)), set(), ConflictKind.ENDPOINT_IN_INTERIOR),
    (((0, 0), (1, 1)), ((1, 1), (2, 0)), set(), ConflictKind.COINCIDENT_VERTICES),
    (((0, 0), (2, 0)), ((0, 0), (1, 0)), {(0, 0)}, ConflictKind.COLLINEAR_OVERLAP),
    (((0, 0), (1, 0)), ((1, 0), (2, 0)), {(1, 0)}, None),
    (((0, 0), (1, 0)), ((2, 0), (3, 0)), set(), None),
    (((0, 0), (1, 0)), ((0, 1), (1, 1)), set(), None),
])
def test_segments_conflict_cases(a, b, shared, expected):
    assert segments_conflict(a, b, shared) == expected
    assert segments_conflict(b, a, shared) == expected


def test_zero_length_segment_rejected():
    with pytest.raises(GeometryError):
        segments_conflict(((1, 1), (1, 1)), ((0, 0), (2, 2)))


coord = st.integers(-8, 8)
point = st.tuples(coord, coord)
segment = st.tuples(point, point).filter(lambda s: s[0] != s[1])


def _shared(a, b):
    return {p for p in a if p in b}


@settings(max_examples=400, deadline=None)
@given(segment, segment)
def test_segments_conflict_matches_parametric_oracle(a, b):
    sh = _shared(a, b)
    assert segments_conflict(a, b, sh) == parametric_conflict(a, b, sh)
    assert segments_conflict(a, b) == parametric_conflict(a, b)


@settings(max_examples=200, deadline=None)
@given(segment, segment, st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
def test_predicates_translation_invariant(a, b, dx, dy):
    def mv(s):
        return tuple((x + dx, y + dy) for x, y in s)
    sh = _shared(a, b)
    sh2 = {(x + dx, y + dy) for x, y in sh}
    assert segments_conflict(a, b, sh) == segments_conflict(mv(a), mv(b), sh2)
    assert orientation(a[0], a[1], b[0]) == orientation(*mv(a), mv(b)[0])


@settings(max_examples=200, deadline=None)
@given(segment, segment)
def test_segments_conflict_symmetric(a, b):
    sh = _shared(a, b)
    assert segments_conflict(a, b, sh) == segments_conflict(b, a, sh)


def test_triangle_valid():
    d = LayeredDrawing(((0, 0), (4, 0), (0, 4)), (0, 0, 0))
    r = validate_layered_drawing(complete_graph(3), d)
    assert r.valid and r.layers_used == 1


def test_convex_k4_one_layer_has_one_crossing():
    g = complete_graph(4)
    d = LayeredDrawing(((0, 0), (4, 0), (4, 4), (0, 4)), (0,) * 6)
    r = validate_layered_drawing(g, d)
    assert len(r.conflicts) == 1
    c = r.conflicts[0]
    assert c.kind is ConflictKind.PROPER_CROSSING
    assert {g.edges[c.first], g.edges[c.second]} == {(0, 2), (1, 3)}


def test_theorem1_g8_valid():
    gk = build_gk(8)
    r = validate_layered_drawing(gk.graph, theorem1_layout(8, gk))
    assert r.valid and r.layers_used == 2


def test_vertex_on_edge_other_layer_reported():
    g = Graph(3, ((0, 1),))
    d = LayeredDrawing(((0, 0), (2, 0), (1, 0)), (5,))
    r = validate_layered_drawing(g, d)
    assert [(c.kind, c.first, c.second) for c in r.conflicts] == [
        (ConflictKind.VERTEX_ON_EDGE, 2, 0)]


def test_coincident_vertices_reported():
    g = Graph(3, ((0, 1),))
    d = LayeredDrawing(((0, 0), (2, 0), (0, 0)), (0,))
    r = validate_layered_drawing(g, d)
    assert not r.valid
    assert any(c.kind is ConflictKind.COINCIDENT_VERTICES and (c.first, c.second) == (0, 2)
               for c in r.conflicts)


def test_sparse_layer_ids_normalized():
    d = LayeredDrawing(((0, 0), (1, 0), (0, 1)), (7, 3, 7))
    assert d.edge_layers == (1, 0, 1)
    assert d.layers_used == 2


def test_misaligned_drawing_rejected():
    with pytest.raises(GeometryError):
        validate_layered_drawing(complete_graph(3), LayeredDrawing(((0, 0),), (0, 0, 0)))
    with pytest.raises(GeometryError):
        validate_layered_drawing(complete_graph(3),
                                 LayeredDrawing(((0, 0), (1, 0), (0, 1)), (0,)))


def _random_drawing(rng, n, m_prob, span, layers):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < m_prob]
    g = Graph(n, tuple(edges))
    pos = tuple((rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n))
    return g, LayeredDrawing(pos, tuple(rng.randrange(layers) for _ in edges))


def _as_vertex_sets(g, report):
    out = set()
    for c in report.conflicts:
        if c.scope == "edges":
            out.add((c.kind, frozenset((g.edges[c.first], g.edges[c.second])), c.layer))
        elif c.scope == "vertex-edge":
            out.add((c.kind, (c.first, g.edges[c.second]), c.layer))
        else:
            out.add((c.kind, (c.first, c.second), None))
    return out


def test_vectorized_matches_scalar(rng):
    for _ in range(60):
        g, d = _random_drawing(rng, rng.randint(2, 12), 0.5, 4, 3)
        fast = validate_layered_drawing(g, d, vectorized=True)
        slow = validate_layered_drawing(g, d, vectorized=False)
        assert fast == slow


def test_huge_coordinates_use_exact_path():
    big = 10 ** 20
    g = complete_graph(4)
    d = LayeredDrawing(((0, 0), (big, 0), (big, big), (0, big)), (0,) * 6)
    assert len(validate_layered_drawing(g, d).conflicts) == 1
    with pytest.raises(GeometryError):
        validate_layered_drawing(g, d, vectorized=True)


def test_result_independent_of_edge_order(rng):
    for _ in range(30):
        g, d = _random_drawing(rng, rng.randint(3, 9), 0.6, 3, 2)
        perm = list(range(g.m))
        rng.shuffle(perm)
        g2 = Graph(g.n, tuple(g.edges[i] for i in perm))
        d2 = LayeredDrawing(d.positions, tuple(d.edge_layers[i] for i in perm))
        assert _as_vertex_sets(g, validate_layered_drawing(g, d)) == \
            _as_vertex_sets(g2, validate_layered_drawing(g2, d2))
