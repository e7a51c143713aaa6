"""Exact integer predicates and a checker for multi-layer straight-line drawings.

Everything here is decided with integer arithmetic.  Python ints never
overflow; the vectorized numpy path in :func:`validate_layered_drawing` is only
taken when coordinates are small enough that every cross product fits in
int64, and any pair it cannot settle by strict signs is re-checked with the
exact scalar predicate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .graph import Graph


class Point(NamedTuple):
    x: int
    y: int


Segment = Tuple[Point, Point]


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class ConflictKind(str, enum.Enum):
    PROPER_CROSSING = "ProperCrossing"
    COLLINEAR_OVERLAP = "CollinearOverlap"
    ENDPOINT_IN_INTERIOR = "EndpointInInterior"
    VERTEX_ON_EDGE = "VertexOnEdge"
    COINCIDENT_VERTICES = "CoincidentVertices"


class GeometryError(ValueError):
    pass


# scope of a Conflict: which entities ``first`` and ``second`` refer to
EDGES = "edges"              # two edge indices
VERTEX_EDGE = "vertex-edge"  # vertex id, edge index
VERTICES = "vertices"        # two vertex ids

_SCOPE_RANK = {EDGES: 0, VERTEX_EDGE: 1, VERTICES: 2}


@dataclass(frozen=True)
class Conflict:
    kind: ConflictKind
    scope: str
    first: int
    second: int
    layer: Optional[int] = None

    def sort_key(self):
        return (_SCOPE_RANK[self.scope], -1 if self.layer is None else self.layer,
                self.first, self.second, self.kind.value)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "scope": self.scope, "first": self.first,
                "second": self.second, "layer": self.layer}


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    conflicts: Tuple[Conflict, ...]
    layers_used: int

    @property
    def pages_used(self) -> int:
        return self.layers_used

    def count(self, kind: ConflictKind) -> int:
        return sum(1 for c in self.conflicts if c.kind is kind)

    def to_json(self, unit: str = "layers_used") -> dict:
        return {"valid": self.valid, unit: self.layers_used,
                "conflicts": [c.to_json() for c in self.conflicts]}


def make_report(conflicts: Iterable[Conflict], layers_used: int) -> ValidationReport:
    ordered = tuple(sorted(set(conflicts), key=Conflict.sort_key))
    return ValidationReport(not ordered, ordered, layers_used)


def normalize_ids(ids: Iterable[int]) -> Tuple[int, ...]:
    """Map arbitrary integer ids onto 0..L-1, preserving their relative order."""
    arr = np.asarray(ids if isinstance(ids, (tuple, list)) else list(ids), dtype=np.int64)
    if arr.size == 0:
        return ()
    _, inverse = np.unique(arr, return_inverse=True)
    return tuple(inverse.ravel().tolist())


@dataclass(frozen=True)
class LayeredDrawing:
    positions: Tuple[Point, ...]
    edge_layers: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions",
                           tuple(Point(int(x), int(y)) for x, y in self.positions))
        object.__setattr__(self, "edge_layers", normalize_ids(self.edge_layers))

    @property
    def layers_used(self) -> int:
        return len(set(self.edge_layers))


def cross(p: Point, q: Point, r: Point) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    return Orientation((c > 0) - (c < 0))


def _in_box(p: Point, a: Point, b: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab."""
    return cross(a, b, p) == 0 and _in_box(p, a, b)


def segments_conflict(a: Segment, b: Segment,
                      shared: AbstractSet[Tuple[int, int]] = frozenset()) -> Optional[ConflictKind]:
    """Classify how two closed segments meet.

    Returns None when they are disjoint or touch only at a common endpoint that
    appears in ``shared``.  Collinear overlap of positive length is always a
    conflict.
    """
    p1, p2 = a
    q1, q2 = b
    if p1 == p2 or q1 == q2:
        raise GeometryError("zero-length segment")
    o1 = cross(p1, p2, q1)
    o2 = cross(p1, p2, q2)
    if o1 == 0 and o2 == 0:
        # collinear points sort along their common line lexicographically
        amin, amax = sorted((tuple(p1), tuple(p2)))
        bmin, bmax = sorted((tuple(q1), tuple(q2)))
        lo, hi = max(amin, bmin), min(amax, bmax)
        if lo > hi:
            return None
        if lo < hi:
            return ConflictKind.COLLINEAR_OVERLAP
        return None if lo in shared else ConflictKind.COINCIDENT_VERTICES
    o3 = cross(q1, q2, p1)
    o4 = cross(q1, q2, p2)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and \
            ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return ConflictKind.PROPER_CROSSING
    # not collinear, so at most one common point; find it among the endpoints
    for o, pt, seg in ((o1, q1, a), (o2, q2, a), (o3, p1, b), (o4, p2, b)):
        if o == 0 and _in_box(pt, *seg):
            if pt == seg[0] or pt == seg[1]:
                return None if tuple(pt) in shared else ConflictKind.COINCIDENT_VERTICES
            return ConflictKind.ENDPOINT_IN_INTERIOR
    return None


# coordinates up to this bound keep every cross product inside int64
_NUMPY_COORD_LIMIT = 1 << 29
_CHUNK = 256


def _fits_int64(positions: Sequence[Point]) -> bool:
    return all(abs(x) <= _NUMPY_COORD_LIMIT and abs(y) <= _NUMPY_COORD_LIMIT for x, y in positions)


def _edge_pair_conflict(g: Graph, pos: Sequence[Point], e: int, f: int) -> Optional[ConflictKind]:
    (u1, v1), (u2, v2) = g.edges[e], g.edges[f]
    common = {u1, v1} & {u2, v2}
    shared = {tuple(pos[w]) for w in common}
    return segments_conflict((pos[u1], pos[v1]), (pos[u2], pos[v2]), shared)


def _coincident(pos: Sequence[Point]) -> List[Conflict]:
    groups: Dict[Point, List[int]] = {}
    for v, p in enumerate(pos):
        groups.setdefault(p, []).append(v)
    out = []
    for vs in groups.values():
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                out.append(Conflict(ConflictKind.COINCIDENT_VERTICES, VERTICES, vs[i], vs[j]))
    return out


def _scalar_conflicts(g: Graph, pos: Sequence[Point], layers: Sequence[int],
                      live: List[int]) -> List[Conflict]:
    out = []
    for x in range(g.n):
        px = pos[x]
        for e in live:
            u, v = g.edges[e]
            if px != pos[u] and px != pos[v] and on_segment(px, pos[u], pos[v]):
                out.append(Conflict(ConflictKind.VERTEX_ON_EDGE, VERTEX_EDGE, x, e, layers[e]))
    by_layer: Dict[int, List[int]] = {}
    for e in live:
        by_layer.setdefault(layers[e], []).append(e)
    for layer, es in by_layer.items():
        for i, e in enumerate(es):
            for f in es[i + 1:]:
                kind = _edge_pair_conflict(g, pos, e, f)
                if kind is not None:
                    out.append(Conflict(kind, EDGES, min(e, f), max(e, f), layer))
    return out


def _orient_np(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _numpy_conflicts(g: Graph, pos: Sequence[Point], layers: Sequence[int],
                     live: List[int]) -> List[Conflict]:
    out: List[Conflict] = []
    if not live:
        return out
    P = np.array(pos, dtype=np.int64).reshape(-1, 2)
    E = np.array([g.edges[e] for e in live], dtype=np.int64)
    ids = np.array(live, dtype=np.int64)
    A, B = P[E[:, 0]], P[E[:, 1]]
    lo, hi = np.minimum(A, B), np.maximum(A, B)

    # vertices strictly inside non-incident edges, any layer
    for s in range(0, g.n, _CHUNK):
        X = P[s:s + _CHUNK]
        xx, xy = X[:, 0:1], X[:, 1:2]
        hit = _orient_np(A[:, 0], A[:, 1], B[:, 0], B[:, 1], xx, xy) == 0
        hit &= (lo[:, 0] <= xx) & (xx <= hi[:, 0]) & (lo[:, 1] <= xy) & (xy <= hi[:, 1])
        hit &= ~(((A[:, 0] == xx) & (A[:, 1] == xy)) | ((B[:, 0] == xx) & (B[:, 1] == xy)))
        for r, c in zip(*np.nonzero(hit)):
            e = int(ids[c])
            out.append(Conflict(ConflictKind.VERTEX_ON_EDGE, VERTEX_EDGE, s + int(r), e, layers[e]))

    layer_arr = np.array([layers[e] for e in live])
    for layer in sorted(set(layer_arr.tolist())):
        sel = np.nonzero(layer_arr == layer)[0]
        a, b, l, h, eid, ends = A[sel], B[sel], lo[sel], hi[sel], ids[sel], E[sel]
        cnt = len(sel)
        for s in range(0, cnt, _CHUNK):
            r = slice(s, min(s + _CHUNK, cnt))
            c = slice(s, cnt)  # only pairs (i, j) with j > i are needed
            ra, rb, rl, rh, re = a[r][:, None, :], b[r][:, None, :], l[r][:, None, :], \
                h[r][:, None, :], ends[r][:, None, :]
            ca, cb, cl, ch, ce = a[c], b[c], l[c], h[c], ends[c]
            ax, ay, bx, by = ra[..., 0], ra[..., 1], rb[..., 0], rb[..., 1]
            o1 = _orient_np(ax, ay, bx, by, ca[:, 0], ca[:, 1])
            o2 = _orient_np(ax, ay, bx, by, cb[:, 0], cb[:, 1])
            o3 = _orient_np(ca[:, 0], ca[:, 1], cb[:, 0], cb[:, 1], ax, ay)
            o4 = _orient_np(ca[:, 0], ca[:, 1], cb[:, 0], cb[:, 1], bx, by)
            upper = np.arange(s, cnt)[None, :] > np.arange(r.start, r.stop)[:, None]
            live_pairs = upper & (rl[..., 0] <= ch[:, 0]) & (cl[:, 0] <= rh[..., 0]) \
                & (rl[..., 1] <= ch[:, 1]) & (cl[:, 1] <= rh[..., 1])
            proper = live_pairs & (o1 * o2 < 0) & (o3 * o4 < 0)
            # segments sharing a graph vertex can only meet elsewhere if collinear
            shares = (re[..., 0] == ce[:, 0]) | (re[..., 0] == ce[:, 1]) \
                | (re[..., 1] == ce[:, 0]) | (re[..., 1] == ce[:, 1])
            collinear = (o1 == 0) & (o2 == 0)

            def inside(px, py, lo_, hi_):
                return (lo_[..., 0] <= px) & (px <= hi_[..., 0]) \
                    & (lo_[..., 1] <= py) & (py <= hi_[..., 1])

            # a zero orientation matters only for an endpoint inside the other box;
            # otherwise two non-collinear segments cannot meet
            touchy = live_pairs & ~(shares & ~collinear) & (
                ((o1 == 0) & inside(ca[:, 0], ca[:, 1], rl, rh))
                | ((o2 == 0) & inside(cb[:, 0], cb[:, 1], rl, rh))
                | ((o3 == 0) & inside(ax, ay, cl, ch))
                | ((o4 == 0) & inside(bx, by, cl, ch)))
            for i, j in zip(*np.nonzero(proper)):
                e, f = int(eid[s + i]), int(eid[s + j])
                out.append(Conflict(ConflictKind.PROPER_CROSSING, EDGES, min(e, f), max(e, f), layer))
            for i, j in zip(*np.nonzero(touchy)):
                e, f = int(eid[s + i]), int(eid[s + j])
                kind = _edge_pair_conflict(g, pos, e, f)
                if kind is not None:
                    out.append(Conflict(kind, EDGES, min(e, f), max(e, f), layer))
    return out


def validate_layered_drawing(g: Graph, d: LayeredDrawing,
                             vectorized: Optional[bool] = None) -> ValidationReport:
    """Check a layered straight-line drawing of ``g``.

    Reports every same-layer pair of edges that share a point other than a
    common vertex, every vertex lying on a non-incident edge of any layer,
    and every pair of vertices placed at the same point.
    """
    if len(d.positions) != g.n:
        raise GeometryError(f"drawing has {len(d.positions)} positions for {g.n} vertices")
    if len(d.edge_layers) != g.m:
        raise GeometryError(f"drawing has {len(d.edge_layers)} edge layers for {g.m} edges")
    pos = d.positions
    conflicts = _coincident(pos)
    # edges collapsed to a point are already covered by the coincidence report
    live = [e for e, (u, v) in enumerate(g.edges) if pos[u] != pos[v]]
    if vectorized is None:
        vectorized = _fits_int64(pos)
    if vectorized:
        if not _fits_int64(pos):
            raise GeometryError("coordinates too large for the int64 path")
        conflicts += _numpy_conflicts(g, pos, d.edge_layers, live)
    else:
        conflicts += _scalar_conflicts(g, pos, d.edge_layers, live)
    return make_report(conflicts, d.layers_used)
