"""Geometric thickness versus book thickness of subdivided complete graphs."""

from .book import (BookEmbedding, book_thickness_at_most, book_thickness_exact,
                   chords_interleave, embed_on_circle, validate_book_embedding)
from .geom import (ConflictKind, LayeredDrawing, Orientation, Point, ValidationReport,
                   orientation, segments_conflict, validate_layered_drawing)
from .graph import GkGraph, Graph, build_gk, complete_graph, subdivide_all_edges
from .layouts import sqrt_book_layout, theorem1_layout
from .separation import (find_monochromatic_clique, is_planar, page_pair_coloring,
                         separation_audit)

__version__ = "0.1.0"
