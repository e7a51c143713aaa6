"""Simple undirected graphs and the subdivided complete graphs G_k.

Vertices are the integers ``0..n-1``.  Edges are stored as ``(u, v)`` tuples
with ``u < v`` in a fixed order, so that per-edge arrays (layers, pages) can
be stored alongside the graph without ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

Edge = Tuple[int, int]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def _trusted(cls, n: int, edges: Tuple[Edge, ...]) -> "Graph":
        # for constructions whose edges are normalized and distinct by design
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) int64 array."""
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph on ``vertices``; also returns the old ids in new order."""
        keep = sorted(set(vertices))
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges
                 if u in relabel and v in relabel]
        return Graph(len(keep), tuple(edges)), keep


@dataclass(frozen=True)
class Singleton:
    i: int


@dataclass(frozen=True)
class Doubleton:
    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise GraphError(f"doubleton indices must satisfy i < j, got ({self.i}, {self.j})")


VertexLabel = Union[Singleton, Doubleton]


@dataclass(frozen=True)
class GkGraph:
    """K_k with every edge subdivided once.

    Vertices ``0..k-1`` are the original vertices (singleton subsets), followed
    by one subdivision vertex per pair ``i < j`` in lexicographic order.  The
    pair of rank r owns edges ``2r`` (``v_i - w_ij``) and ``2r + 1``
    (``w_ij - v_j``).
    """

    graph: Graph
    k: int

    def singleton(self, i: int) -> int:
        return i

    def doubleton(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.k + pair_rank(self.k, i, j)

    def pair_path(self, i: int, j: int) -> Tuple[int, int]:
        if i > j:
            i, j = j, i
        r = pair_rank(self.k, i, j)
        return 2 * r, 2 * r + 1

    @property
    def pairs(self) -> List[Edge]:
        return list(combinations(range(self.k), 2))

    @cached_property
    def labels(self) -> Tuple[VertexLabel, ...]:
        out: List[VertexLabel] = [Singleton(i) for i in range(self.k)]
        out.extend(Doubleton(i, j) for i, j in combinations(range(self.k), 2))
        return tuple(out)

    @cached_property
    def pair_paths(self) -> Dict[Edge, Tuple[int, int]]:
        """Map each pair (i, j), i < j, to its two edge indices (near v_i, near v_j)."""
        return {pair: (2 * r, 2 * r + 1) for r, pair in enumerate(self.pairs)}


def pair_rank(k: int, i: int, j: int) -> int:
    """Position of the pair (i, j), i < j, in lexicographic order over range(k)."""
    return i * k - i * (i + 1) // 2 + (j - i - 1)


def complete_graph(k: int) -> Graph:
    # k = 0 gives the empty graph
    g = Graph._trusted(k, tuple(combinations(range(k), 2)))
    first, second = np.triu_indices(k, 1)
    g.__dict__["edge_array"] = np.stack((first, second), axis=1).astype(np.int64)
    return g


def subdivide_all_edges(g: Graph) -> Tuple[Graph, Dict[Edge, int]]:
    """Replace every edge (u, v) by a path u - w - v through a fresh vertex w.

    Fresh vertices are numbered ``n, n+1, ...`` in edge order.  The new edge
    list holds ``(u, w), (v, w)`` for each original edge, in edge order.
    """
    base = g.edge_array
    mids = np.arange(g.n, g.n + g.m, dtype=np.int64)
    arr = np.empty((2 * g.m, 2), dtype=np.int64)
    arr[0::2, 0], arr[1::2, 0] = base[:, 0], base[:, 1]
    arr[:, 1] = np.repeat(mids, 2)
    # w > u, v for every fresh vertex, so (u, w) and (v, w) are already normalized
    sub = Graph._trusted(g.n + g.m, tuple(zip(arr[:, 0].tolist(), arr[:, 1].tolist())))
    sub.__dict__["edge_array"] = arr
    midpoint = dict(zip(g.edges, mids.tolist()))
    return sub, midpoint


def build_gk(k: int) -> GkGraph:
    if k < 2:
        raise GraphError(f"G_k needs k >= 2, got {k}")
    graph, _ = subdivide_all_edges(complete_graph(k))
    return GkGraph(graph, k)
