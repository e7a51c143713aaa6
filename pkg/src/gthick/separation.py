"""Page-pair coloring audit of book embeddings of G_k.

Given a book embedding of G_k, each edge ij of K_k is colored by the pair of
pages used by its two-edge path.  A color class containing a K_5 would give a
two-page book embedding of G_5, which cannot exist because G_5 is not planar.
The audit searches for such a K_5 and, if it finds one, extracts and checks
the offending sub-embedding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from .book import BookEmbedding, validate_book_embedding
from .geom import LayeredDrawing
from .graph import Edge, GkGraph, Graph, pair_rank

Color = Tuple[int, int]


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    planar, _ = nx.check_planarity(_to_nx(g))
    return planar


def kuratowski_witness(g: Graph) -> Optional[List[Edge]]:
    """Edges of a subdivided K_5 or K_3,3 inside ``g``, or None if ``g`` is planar."""
    planar, witness = nx.check_planarity(_to_nx(g), counterexample=True)
    if planar:
        return None
    return sorted((min(u, v), max(u, v)) for u, v in witness.edges())


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: Tuple[Color, ...]  # aligned with complete_graph(k).edges

    def color_of(self, i: int, j: int) -> Color:
        if i > j:
            i, j = j, i
        return self.colors[pair_rank(self.k, i, j)]

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> Dict[Color, List[Edge]]:
        out: Dict[Color, List[Edge]] = {}
        for (i, j), c in zip(combinations(range(self.k), 2), self.colors):
            out.setdefault(c, []).append((i, j))
        return out


def _check_alignment(gk: GkGraph, be: BookEmbedding) -> None:
    if len(be.order) != gk.graph.n or len(be.edge_pages) != gk.graph.m:
        raise ValueError("book embedding is not aligned with G_k")


def page_pair_coloring(gk: GkGraph, be: BookEmbedding) -> EdgeColoring:
    """Color each K_k edge by the unordered pair of pages on its G_k path.

    A path lying on a single page a gets {a, a'} with a' the smallest other
    page id; with only one page in use every edge gets (0, 0).
    """
    if not isinstance(be, BookEmbedding):
        raise TypeError(f"expected a BookEmbedding, got {type(be).__name__}")
    _check_alignment(gk, be)
    npages = be.pages_used
    colors = []
    for pair in gk.pairs:
        near, far = gk.pair_paths[pair]
        a, b = be.edge_pages[near], be.edge_pages[far]
        if a == b:
            if npages < 2:
                colors.append((0, 0))
                continue
            b = 1 if a == 0 else 0
        colors.append((min(a, b), max(a, b)))
    return EdgeColoring(gk.k, tuple(colors))


def _clique_in_class(k: int, edges: List[Edge], size: int) -> Optional[List[int]]:
    # Bron-Kerbosch with pivoting, stopping at the first clique of `size`
    adj: Dict[int, Set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    # anything of degree < size-1 cannot be in a clique of `size`
    changed = True
    while changed:
        changed = False
        for v in [v for v, nb in adj.items() if len(nb) < size - 1]:
            for w in adj.pop(v):
                if w in adj:
                    adj[w].discard(v)
            changed = True
    if not adj:
        return None

    def expand(r: List[int], p: Set[int], x: Set[int]) -> Optional[List[int]]:
        if len(r) >= size:
            return r
        if len(r) + len(p) < size:
            return None
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot], key=lambda u: (-len(adj[u]), u)):
            found = expand(r + [v], p & adj[v], x & adj[v])
            if found:
                return found
            p = p - {v}
            x = x | {v}
        return None

    found = expand([], set(adj), set())
    return sorted(found[:size]) if found else None


def find_monochromatic_clique(coloring: EdgeColoring, size: int) -> Optional[List[int]]:
    """Vertices of a K_size whose edges all share one color, or None.

    Each color class is searched exactly; the least witness (by sorted vertex
    list, then color) over all classes is returned.
    """
    if size < 2:
        raise ValueError("clique size must be at least 2")
    best = None
    for color, edges in sorted(coloring.classes().items()):
        found = _clique_in_class(coloring.k, edges, size)
        if found is not None and (best is None or (found, color) < best):
            best = (found, color)
    return best[0] if best else None


def monochromatic_clique_with_color(coloring: EdgeColoring,
                                    size: int) -> Optional[Tuple[List[int], Color]]:
    found = find_monochromatic_clique(coloring, size)
    if found is None:
        return None
    return found, coloring.color_of(found[0], found[1])


class Verdict(str, enum.Enum):
    CONSISTENT = "consistent"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class SubEmbedding:
    """The G_5 spanned by a monochromatic K_5, on the two pages of its color."""

    vertices: Tuple[int, ...]  # G_k vertex ids, in the sub-graph's vertex order
    graph: Graph
    embedding: BookEmbedding
    valid: bool


@dataclass(frozen=True)
class AuditReport:
    k: int
    pages_used: int
    colors_used: int
    embedding_valid: bool
    mono_k5: Optional[Tuple[int, ...]]
    mono_color: Optional[Color]
    sub_embedding: Optional[SubEmbedding]
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "pages_used": self.pages_used,
            "colors_used": self.colors_used,
            "mono_k5": list(self.mono_k5) if self.mono_k5 else None,
            "verdict": self.verdict.value,
            "embedding_valid": self.embedding_valid,
            "mono_color": list(self.mono_color) if self.mono_color else None,
            "sub_embedding_valid": self.sub_embedding.valid if self.sub_embedding else None,
        }


def extract_sub_embedding(gk: GkGraph, be: BookEmbedding, clique: List[int]) -> SubEmbedding:
    keep = list(clique) + [gk.doubleton(i, j) for i, j in combinations(sorted(clique), 2)]
    sub, old_ids = gk.graph.induced(keep)
    new_id = {v: i for i, v in enumerate(old_ids)}
    order = tuple(new_id[v] for v in be.order if v in new_id)
    page_of = {gk.graph.edges[e]: p for e, p in enumerate(be.edge_pages)}
    pages = tuple(page_of[(old_ids[u], old_ids[v])] for u, v in sub.edges)
    emb = BookEmbedding(order, pages)
    return SubEmbedding(tuple(old_ids), sub, emb, validate_book_embedding(sub, emb).valid)


def separation_audit(gk: GkGraph, be: BookEmbedding) -> AuditReport:
    if isinstance(be, LayeredDrawing) or not isinstance(be, BookEmbedding):
        raise TypeError("separation_audit needs a BookEmbedding, not a layered drawing")
    _check_alignment(gk, be)
    valid = validate_book_embedding(gk.graph, be).valid
    coloring = page_pair_coloring(gk, be)
    hit = monochromatic_clique_with_color(coloring, 5) if gk.k >= 5 else None
    sub = None
    verdict = Verdict.CONSISTENT
    if hit is not None:
        sub = extract_sub_embedding(gk, be, hit[0])
        # a valid embedding cannot produce a monochromatic K_5: its G_5 would
        # be a planar drawing of a nonplanar graph
        verdict = Verdict.CONTRADICTION
    return AuditReport(
        k=gk.k, pages_used=be.pages_used, colors_used=coloring.colors_used,
        embedding_valid=valid,
        mono_k5=tuple(hit[0]) if hit else None,
        mono_color=hit[1] if hit else None,
        sub_embedding=sub, verdict=verdict,
    )
