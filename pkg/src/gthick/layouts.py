"""Two explicit layouts of G_k.

``theorem1_layout`` draws G_k on two straight-line layers with integer
coordinates.  ``sqrt_book_layout`` builds a book embedding of G_k on
O(sqrt k) pages by grouping the original vertices into blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, isqrt
from typing import List, Optional

import numpy as np

from .book import BookEmbedding
from .geom import LayeredDrawing, Point
from .graph import GkGraph, build_gk


def theorem1_layout(k: int, gk: Optional[GkGraph] = None) -> LayeredDrawing:
    """Two-layer drawing of G_k.

    v_i sits at (i, i+1) and the subdivision vertex of pair i<j at (j+1, i).
    The half-path to v_i is on layer 0, the half-path to v_j on layer 1.  Every
    layer-0 edge in row i ends at v_i and every layer-1 edge in column j+1 ends
    at v_j, so neither layer has a crossing.  For k < 5 the graph is planar and
    one layer would do; the layout still uses two.
    """
    gk = gk or build_gk(k)
    positions: List[Point] = [Point(i, i + 1) for i in range(k)]
    positions.extend(Point(j + 1, i) for i, j in gk.pairs)
    # edge 2r is the half-path of pair r next to v_i, edge 2r+1 the half next to v_j
    layers = [0, 1] * (gk.graph.m // 2)
    return LayeredDrawing(tuple(positions), tuple(layers))


def ceil_sqrt(k: int) -> int:
    r = isqrt(k)
    return r if r * r == k else r + 1


@dataclass(frozen=True)
class BlockScheme:
    k: int
    block_size: int

    def __post_init__(self):
        if not 1 <= self.block_size <= max(self.k, 1):
            raise ValueError(f"block size must be in [1, {self.k}], got {self.block_size}")

    @property
    def num_blocks(self) -> int:
        return ceil(self.k / self.block_size)

    @property
    def blocks(self) -> List[range]:
        b = self.block_size
        return [range(s, min(s + b, self.k)) for s in range(0, self.k, b)]

    def block(self, v: int) -> int:
        return v // self.block_size

    def slot(self, v: int) -> int:
        return v % self.block_size

    @property
    def page_bound(self) -> int:
        return self.block_size + self.num_blocks


def sqrt_book_layout(k: int, block_size: Optional[int] = None,
                     gk: Optional[GkGraph] = None) -> BookEmbedding:
    """Book embedding of G_k on at most b + ceil(k/b) pages.

    The original vertices are cut into consecutive blocks of size b (default
    ceil(sqrt k)).  Each block occupies one arc of the spine: its vertices,
    then the subdivision vertices w_uv whose smaller end u lies in the block.
    The edge u - w_uv goes on the slot page of u (one page per position within
    a block, shared by all blocks) and the long edge w_uv - v goes on the page
    of u's block.

    On a block page, transfer points are sorted by how far clockwise their far
    end lies from the end of the block's arc, farthest first, which makes the
    long chords nest.  Same-block far ends wrap all the way around and so come
    first.
    """
    gk = gk or build_gk(k)
    if block_size is None:
        block_size = ceil_sqrt(k)
    scheme = BlockScheme(k, block_size)
    b, nblocks = scheme.block_size, scheme.num_blocks

    # pairs (i, j) in lexicographic order, i.e. doubleton vertex k + r for row r
    first, second = np.triu_indices(k, 1)
    home = first // b
    homed = np.bincount(home, minlength=nblocks)
    members = np.array([len(r) for r in scheme.blocks])
    arc_len = members + homed
    arc_start = np.concatenate(([0], np.cumsum(arc_len)[:-1]))
    arc_end = arc_start + arc_len
    total = int(arc_len.sum())
    verts = np.arange(k)
    vpos = arc_start[verts // b] + verts % b

    ahead = (vpos[second] - arc_end[home]) % total
    # by home block, then farthest far end first, ties by (i, j)
    transfer = np.lexsort((second, first, -ahead, home)) + k
    cut = np.concatenate(([0], np.cumsum(homed)))
    order: List[int] = []
    for blk, vs in enumerate(scheme.blocks):
        order.extend(vs)
        order.extend(transfer[cut[blk]:cut[blk + 1]].tolist())

    pages = np.empty(2 * len(first), dtype=np.int64)
    pages[0::2] = first % b
    pages[1::2] = b + home
    return BookEmbedding(tuple(order), tuple(pages.tolist()))
