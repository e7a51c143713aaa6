"""Book embeddings: validity by chord interleaving, convex realization, exact search.

A book embedding is a circular vertex order plus a page per edge.  Two edges
on the same page conflict exactly when their endpoints alternate around the
circle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import ceil
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .geom import (EDGES, Conflict, ConflictKind, LayeredDrawing, ValidationReport,
                   make_report, normalize_ids)
from .graph import Edge, Graph

DEFAULT_BUDGET = 2_000_000


class BookError(ValueError):
    pass


@dataclass(frozen=True)
class BookEmbedding:
    order: Tuple[int, ...]
    edge_pages: Tuple[int, ...]

    def __post_init__(self):
        arr = np.asarray(self.order, dtype=np.int64).reshape(-1)
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise BookError("order is not a permutation of the vertex ids")
        object.__setattr__(self, "order", tuple(arr.tolist()))
        object.__setattr__(self, "edge_pages", normalize_ids(self.edge_pages))

    @property
    def pages_used(self) -> int:
        return len(set(self.edge_pages))

    def positions(self) -> List[int]:
        where = [0] * len(self.order)
        for t, v in enumerate(self.order):
            where[v] = t
        return where


def _interleave_positions(a: int, b: int, c: int, d: int) -> bool:
    # chords {a,b} and {c,d} given by circular positions, four distinct values
    if a > b:
        a, b = b, a
    return (a < c < b) != (a < d < b)


def chords_interleave(order: Sequence[int], e1: Edge, e2: Edge) -> bool:
    """True iff the endpoints of e1 and e2 alternate around the circular order."""
    if set(e1) == set(e2):
        raise BookError(f"identical edges {e1}")
    if len(set(e1) | set(e2)) < 4:
        return False
    where = {v: t for t, v in enumerate(order)}
    return _interleave_positions(where[e1[0]], where[e1[1]], where[e2[0]], where[e2[1]])


def _check_alignment(g: Graph, be: BookEmbedding) -> None:
    if len(be.order) != g.n:
        raise BookError(f"order has {len(be.order)} entries for {g.n} vertices")
    if len(be.edge_pages) != g.m:
        raise BookError(f"edge_pages has {len(be.edge_pages)} entries for {g.m} edges")


def _crossing_free(lo: np.ndarray, hi: np.ndarray) -> bool:
    """True iff no two chords (lo[i], hi[i]) interleave; shared endpoints are fine.

    With chords sorted by left end, chord i is crossed exactly when some chord
    starting strictly inside it ends strictly beyond hi[i].
    """
    s = len(lo)
    if s < 2:
        return True
    idx = np.argsort(lo, kind="stable")
    a, b = lo[idx], hi[idx]
    start = np.searchsorted(a, a, side="right")
    stop = np.searchsorted(a, b, side="left")
    nonempty = start < stop
    if not nonempty.any():
        return True
    # reduceat needs in-range indices: pad with a sentinel that never wins
    padded = np.append(b, -1)
    bounds = np.empty(2 * s, dtype=np.int64)
    bounds[0::2], bounds[1::2] = start, stop
    inner_max = np.maximum.reduceat(padded, bounds)[0::2]
    return not np.any(nonempty & (inner_max > b))


def _crossing_pairs(lo: np.ndarray, hi: np.ndarray) -> List[Tuple[int, int]]:
    """All interleaving index pairs (i, j), i < j."""
    out = []
    s = len(lo)
    for r in range(0, s, 512):
        a, b = lo[r:r + 512, None], hi[r:r + 512, None]
        hit = ((a < lo) & (lo < b) & (b < hi)) | ((lo < a) & (a < hi) & (hi < b))
        hit &= np.arange(s)[None, :] > np.arange(r, min(r + 512, s))[:, None]
        out.extend((r + int(i), int(j)) for i, j in zip(*np.nonzero(hit)))
    return out


def validate_book_embedding(g: Graph, be: BookEmbedding) -> ValidationReport:
    _check_alignment(g, be)
    conflicts = []
    if g.m:
        where = np.array(be.positions(), dtype=np.int64)
        ends = where[g.edge_array]
        lo, hi = ends.min(axis=1), ends.max(axis=1)
        pages = np.array(be.edge_pages, dtype=np.int64)
        for page in np.unique(pages):
            es = np.nonzero(pages == page)[0]
            if _crossing_free(lo[es], hi[es]):
                continue
            for i, j in _crossing_pairs(lo[es], hi[es]):
                e, f = int(es[i]), int(es[j])
                conflicts.append(Conflict(ConflictKind.PROPER_CROSSING, EDGES,
                                          min(e, f), max(e, f), int(page)))
    return make_report(conflicts, be.pages_used)


def embed_on_circle(g: Graph, be: BookEmbedding) -> LayeredDrawing:
    """Realize the book geometrically: position t goes to the parabola point (t, t^2).

    Points on a parabola are in convex position with no three collinear, so
    the geometric crossings are exactly the interleaving pairs.
    """
    _check_alignment(g, be)
    where = be.positions()
    return LayeredDrawing(tuple((where[v], where[v] ** 2) for v in range(g.n)), be.edge_pages)


# ---------------------------------------------------------------------------
# exact search


class LowerBoundReason(str, enum.Enum):
    PLANARITY_VIOLATION = "PlanarityViolation"
    OUTERPLANAR_EDGE_BOUND = "OuterplanarEdgeBound"
    EXHAUSTIVE_SEARCH = "ExhaustiveSearch"


@dataclass(frozen=True)
class UpperBound:
    embedding: BookEmbedding


@dataclass(frozen=True)
class LowerBound:
    reason: LowerBoundReason


BtCertificate = Union[UpperBound, LowerBound]


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchResult:
    answer: Answer
    embedding: Optional[BookEmbedding] = None
    nodes: int = 0


@dataclass(frozen=True)
class BookThickness:
    """Exact book thickness with both halves of the certificate.

    ``lower`` says why ``value - 1`` pages do not suffice; it is None when
    ``value`` is 0 or 1 and the graph has no edges to force more.
    """

    value: int
    upper: UpperBound
    lower: Optional[LowerBound]


class _BudgetExceeded(Exception):
    pass


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded


def _color(adj: List[int], p: int, counter: _Counter) -> Optional[List[int]]:
    """Proper p-coloring of a conflict graph given as neighbor bitmasks.

    Bipartiteness check for p <= 2, otherwise backtracking over vertices in
    decreasing degree order with the lowest free color tried first.
    """
    n = len(adj)
    colors = [-1] * n
    if n == 0:
        return colors
    if p <= 2:
        for s in range(n):
            if colors[s] >= 0:
                continue
            colors[s] = 0
            stack = [s]
            while stack:
                counter.tick()
                u = stack.pop()
                m = adj[u]
                while m:
                    low = m & -m
                    w = low.bit_length() - 1
                    m ^= low
                    if colors[w] < 0:
                        colors[w] = 1 - colors[u]
                        stack.append(w)
                    elif colors[w] == colors[u]:
                        return None
        if p == 1 and any(adj):
            return None
        return colors
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        counter.tick()
        v = order[i]
        taken = 0
        m = adj[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if colors[w] >= 0:
                taken |= 1 << colors[w]
        # a fresh color is interchangeable with any other fresh one
        for c in range(min(p, used + 1)):
            if not taken >> c & 1:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return colors if place(0, 0) else None


def book_thickness_at_most(g: Graph, p: int, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Decide whether ``g`` has a book embedding on at most ``p`` pages.

    Searches circular orders with vertex 0 first and ``order[1] < order[-1]``
    (one representative per rotation/reflection class), growing the order one
    vertex at a time and abandoning a prefix as soon as the chords among its
    vertices cannot be split into ``p`` non-interleaving pages.  ``budget``
    caps the number of search nodes, counting coloring steps.
    """
    if p < 1:
        raise BookError("p must be at least 1")
    n, m = g.n, g.m
    if n <= 3 or m == 0:
        return SearchResult(Answer.YES, BookEmbedding(tuple(range(n)), (0,) * m), 0)
    if m > p * (2 * n - 3):
        return SearchResult(Answer.NO, None, 0)

    adj = g.adjacency()
    index = g.edge_index()
    counter = _Counter(budget)
    order: List[int] = [0]
    placed = [False] * n
    placed[0] = True
    # chords among placed vertices: (edge id, lo position, hi position)
    chords: List[Tuple[int, int, int]] = []
    where = [-1] * n
    where[0] = 0

    def conflict_masks() -> List[int]:
        masks = [0] * len(chords)
        for i, (_, a, b) in enumerate(chords):
            for j in range(i):
                _, c, d = chords[j]
                if a < c < b < d or c < a < d < b:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return masks

    found: List[Optional[BookEmbedding]] = [None]

    def extend() -> bool:
        t = len(order)
        if t == n:
            if order[1] > order[-1]:
                return False
            colors = _color(conflict_masks(), p, counter)
            if colors is None:
                return False
            pages = [0] * m
            for (e, _, _), c in zip(chords, colors):
                pages[e] = c
            found[0] = BookEmbedding(tuple(order), tuple(pages))
            return True
        for v in range(1, n):
            if placed[v]:
                continue
            counter.tick()
            placed[v] = True
            where[v] = t
            order.append(v)
            before = len(chords)
            for w in adj[v]:
                if placed[w] and w != v:
                    chords.append((index[(min(v, w), max(v, w))], where[w], t))
            ok = True
            if len(chords) > before and t < n - 1:
                ok = _color(conflict_masks(), p, counter) is not None
            if ok and extend():
                return True
            del chords[before:]
            order.pop()
            where[v] = -1
            placed[v] = False
        return False

    try:
        if extend():
            return SearchResult(Answer.YES, found[0], counter.nodes)
        return SearchResult(Answer.NO, None, counter.nodes)
    except _BudgetExceeded:
        return SearchResult(Answer.UNKNOWN, None, counter.nodes)


def outerplanar_lower_bound(g: Graph) -> int:
    if g.m == 0:
        return 0
    if g.n <= 2:
        return 1
    return max(1, ceil(g.m / (2 * g.n - 3)))


def book_thickness_exact(g: Graph, max_p: int = 8,
                         budget: int = DEFAULT_BUDGET) -> Optional[BookThickness]:
    """Smallest page count admitting a book embedding, or None if undecided.

    None means either ``max_p`` pages were not enough or the search budget ran
    out on some page count.  An edgeless graph has book thickness 0.
    """
    from .separation import is_planar

    if max_p < 1:
        raise BookError("max_p must be at least 1")
    if g.m == 0:
        return BookThickness(0, UpperBound(BookEmbedding(tuple(range(g.n)), ())), None)
    start = outerplanar_lower_bound(g)
    lower: Optional[LowerBound] = None
    if start > 1:
        lower = LowerBound(LowerBoundReason.OUTERPLANAR_EDGE_BOUND)
    if start < 3 and not is_planar(g):
        start, lower = 3, LowerBound(LowerBoundReason.PLANARITY_VIOLATION)
    for p in range(start, max_p + 1):
        res = book_thickness_at_most(g, p, budget)
        if res.answer is Answer.YES:
            return BookThickness(p, UpperBound(res.embedding), lower)
        if res.answer is Answer.UNKNOWN:
            return None
        lower = LowerBound(LowerBoundReason.EXHAUSTIVE_SEARCH)
    return None
