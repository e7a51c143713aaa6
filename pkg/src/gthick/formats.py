"""JSON files for graphs, drawings, book embeddings and reports.

Field names are fixed:

* graph: ``{"n": int, "edges": [[u, v], ...]}``; a G_k file adds ``"k"`` and
  ``"labels": [{"s": i} | {"d": [i, j]}]``
* drawing: ``{"positions": [[x, y], ...], "edge_layers": [int, ...]}``
* book: ``{"order": [v, ...], "edge_pages": [int, ...]}``

Loaders raise :class:`FormatError` naming the offending field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, List, Union

from .book import BookEmbedding, BookError
from .geom import LayeredDrawing
from .graph import Doubleton, GkGraph, Graph, GraphError, Singleton, build_gk

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def _read(path: PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror})") from None


def write_json(path: PathLike, obj: Any) -> None:
    Path(path).write_text(dumps(obj))


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _field(doc: Any, name: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if name not in doc:
        raise FormatError(f"{where}: missing field '{name}'")
    return doc[name]


def _int(x: Any, name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"field '{name}': expected an integer, got {x!r}")
    return x


def _int_list(x: Any, name: str) -> List[int]:
    if not isinstance(x, list):
        raise FormatError(f"field '{name}': expected a list")
    return [_int(v, name) for v in x]


def _pair_list(x: Any, name: str) -> List[List[int]]:
    if not isinstance(x, list):
        raise FormatError(f"field '{name}': expected a list")
    out = []
    for item in x:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"field '{name}': expected pairs, got {item!r}")
        out.append([_int(item[0], name), _int(item[1], name)])
    return out


def graph_to_json(g: Union[Graph, GkGraph]) -> dict:
    if isinstance(g, GkGraph):
        doc = graph_to_json(g.graph)
        doc["k"] = g.k
        doc["labels"] = [{"s": lab.i} if isinstance(lab, Singleton) else {"d": [lab.i, lab.j]}
                         for lab in g.labels]
        return doc
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(doc: Any, where: str = "graph") -> Union[Graph, GkGraph]:
    n = _int(_field(doc, "n", where), "n")
    edges = _pair_list(_field(doc, "edges", where), "edges")
    try:
        g = Graph(n, tuple(tuple(e) for e in edges))
    except GraphError as exc:
        raise FormatError(f"field 'edges': {exc}") from None
    if "k" not in doc:
        return g
    k = _int(doc["k"], "k")
    try:
        gk = build_gk(k)
    except GraphError as exc:
        raise FormatError(f"field 'k': {exc}") from None
    if gk.graph != g:
        raise FormatError("field 'edges': does not match the G_k construction for the given k")
    if "labels" in doc:
        labels = doc["labels"]
        if not isinstance(labels, list) or len(labels) != n:
            raise FormatError("field 'labels': expected one label per vertex")
        parsed = []
        for lab in labels:
            if isinstance(lab, dict) and "s" in lab:
                parsed.append(Singleton(_int(lab["s"], "labels")))
            elif isinstance(lab, dict) and "d" in lab and isinstance(lab["d"], list) and len(lab["d"]) == 2:
                parsed.append(Doubleton(_int(lab["d"][0], "labels"), _int(lab["d"][1], "labels")))
            else:
                raise FormatError(f"field 'labels': bad label {lab!r}")
        if tuple(parsed) != gk.labels:
            raise FormatError("field 'labels': does not match the G_k vertex convention")
    return gk


def drawing_to_json(d: LayeredDrawing) -> dict:
    return {"positions": [list(p) for p in d.positions], "edge_layers": list(d.edge_layers)}


def drawing_from_json(doc: Any, where: str = "drawing") -> LayeredDrawing:
    positions = _pair_list(_field(doc, "positions", where), "positions")
    layers = _int_list(_field(doc, "edge_layers", where), "edge_layers")
    return LayeredDrawing(tuple(tuple(p) for p in positions), tuple(layers))


def book_to_json(be: BookEmbedding) -> dict:
    return {"order": list(be.order), "edge_pages": list(be.edge_pages)}


def book_from_json(doc: Any, where: str = "book") -> BookEmbedding:
    order = _int_list(_field(doc, "order", where), "order")
    pages = _int_list(_field(doc, "edge_pages", where), "edge_pages")
    try:
        return BookEmbedding(tuple(order), tuple(pages))
    except BookError as exc:
        raise FormatError(f"field 'order': {exc}") from None


def load_graph(path: PathLike) -> Union[Graph, GkGraph]:
    return graph_from_json(_read(path), str(path))


def load_drawing(path: PathLike) -> LayeredDrawing:
    return drawing_from_json(_read(path), str(path))


def load_book(path: PathLike) -> BookEmbedding:
    return book_from_json(_read(path), str(path))
