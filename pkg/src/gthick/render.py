"""SVG output for layered drawings and book embeddings.

Output is a pure function of its inputs: no timestamps, no ids from memory
addresses, and coordinates written with a fixed format.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .book import BookEmbedding
from .geom import EDGES, VERTEX_EDGE, VERTICES, Conflict, LayeredDrawing
from .graph import Graph

DEFAULT_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
CONFLICT_COLOR = "#ff00ff"


@dataclass(frozen=True)
class RenderStyle:
    palette: Tuple[str, ...] = DEFAULT_PALETTE
    vertex_radius: int = 4
    scale: int = 40
    margin: int = 20
    stroke_width: int = 2

    def color(self, layer: int) -> str:
        return self.palette[layer % len(self.palette)]


def _num(v: float) -> str:
    if float(v).is_integer():
        return str(int(v))
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _svg(g: Graph, coords: Sequence[Tuple[float, float]], layers: Sequence[int],
         style: RenderStyle, conflicts: Iterable[Conflict] = ()) -> str:
    bad_edges: Set[int] = set()
    bad_vertices: Set[int] = set()
    for c in conflicts:
        if c.scope == EDGES:
            bad_edges.update((c.first, c.second))
        elif c.scope == VERTEX_EDGE:
            bad_vertices.add(c.first)
            bad_edges.add(c.second)
        elif c.scope == VERTICES:
            bad_vertices.update((c.first, c.second))

    s, pad = style.scale, style.margin + style.vertex_radius
    if coords:
        xs = [p[0] for p in coords]
        ys = [p[1] for p in coords]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = 0
    width = (x1 - x0) * s + 2 * pad
    height = (y1 - y0) * s + 2 * pad

    def sx(x):
        return _num((x - x0) * s + pad)

    def sy(y):
        # y grows upward in the drawing, downward in SVG
        return _num((y1 - y) * s + pad)

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
    ]
    for layer in sorted(set(layers)):
        out.append(f'<g class="layer" id="layer-{layer}" stroke="{style.color(layer)}" '
                   f'stroke-width="{style.stroke_width}" stroke-linecap="round">')
        for e, (u, v) in enumerate(g.edges):
            if layers[e] != layer:
                continue
            extra = f' class="conflict" stroke="{CONFLICT_COLOR}" stroke-dasharray="4 2"' \
                if e in bad_edges else ""
            out.append(f'<line x1="{sx(coords[u][0])}" y1="{sy(coords[u][1])}" '
                       f'x2="{sx(coords[v][0])}" y2="{sy(coords[v][1])}"{extra}/>')
        out.append("</g>")
    out.append('<g id="vertices" fill="#000000" stroke="#ffffff" stroke-width="1">')
    for v, (x, y) in enumerate(coords):
        extra = f' class="conflict" fill="{CONFLICT_COLOR}"' if v in bad_vertices else ""
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{style.vertex_radius}"{extra}/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(g: Graph, d: LayeredDrawing, style: Optional[RenderStyle] = None,
               conflicts: Iterable[Conflict] = ()) -> str:
    """One ``<g>`` per layer holding one ``<line>`` per edge, vertices drawn last."""
    return _svg(g, d.positions, d.edge_layers, style or RenderStyle(), conflicts)


def render_book_svg(g: Graph, be: BookEmbedding, style: Optional[RenderStyle] = None,
                    conflicts: Iterable[Conflict] = ()) -> str:
    # spine drawn as a circle; the radius grows with n so vertices stay apart
    n = g.n
    radius = max(1.0, n / (2 * math.pi))
    where = be.positions()
    coords = []
    for v in range(n):
        a = 2 * math.pi * where[v] / max(n, 1)
        coords.append((round(radius * math.sin(a), 3), round(radius * math.cos(a), 3)))
    return _svg(g, coords, be.edge_pages, style or RenderStyle(), conflicts)
