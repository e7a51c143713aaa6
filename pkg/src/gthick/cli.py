"""Command-line entry point.

Exit status: 0 on success or a valid certificate, 1 when a certificate is
invalid (or a question is left undecided), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import formats
from .book import (DEFAULT_BUDGET, BookError, book_thickness_exact,
                   validate_book_embedding)
from .formats import FormatError
from .geom import GeometryError, validate_layered_drawing
from .graph import GkGraph, GraphError, build_gk
from .layouts import sqrt_book_layout, theorem1_layout
from .render import render_book_svg, render_svg
from .separation import separation_audit

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _gk(k: int) -> GkGraph:
    try:
        return build_gk(k)
    except GraphError as exc:
        raise UsageError(f"--k: {exc}") from None


def _plain(g):
    return g.graph if isinstance(g, GkGraph) else g


def cmd_gen_gk(args) -> int:
    _emit(args.out, formats.dumps(formats.graph_to_json(_gk(args.k))))
    return EXIT_OK


def cmd_layout_theorem1(args) -> int:
    gk = _gk(args.k)
    _emit(args.out, formats.dumps(formats.drawing_to_json(theorem1_layout(args.k, gk))))
    return EXIT_OK


def cmd_layout_sqrt(args) -> int:
    gk = _gk(args.k)
    try:
        be = sqrt_book_layout(args.k, args.block_size, gk)
    except ValueError as exc:
        raise UsageError(f"--block-size: {exc}") from None
    _emit(args.out, formats.dumps(formats.book_to_json(be)))
    return EXIT_OK


def _finish_report(report, unit: str, path: Optional[str]) -> int:
    if path:
        _emit(path, formats.dumps(report.to_json(unit)))
    status = "valid" if report.valid else "invalid"
    print(f"{status} {unit}={report.layers_used} conflicts={len(report.conflicts)}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_validate_drawing(args) -> int:
    g = _plain(formats.load_graph(args.graph))
    d = formats.load_drawing(args.drawing)
    return _finish_report(validate_layered_drawing(g, d), "layers_used", args.report)


def cmd_validate_book(args) -> int:
    g = _plain(formats.load_graph(args.graph))
    be = formats.load_book(args.book)
    return _finish_report(validate_book_embedding(g, be), "pages_used", args.report)


def cmd_bt(args) -> int:
    g = _plain(formats.load_graph(args.graph))
    if args.max_pages < 1:
        raise UsageError("--max-pages must be at least 1")
    res = book_thickness_exact(g, args.max_pages, args.budget)
    if res is None:
        print("unknown")
        return EXIT_INVALID
    print(res.value)
    return EXIT_OK


def cmd_audit(args) -> int:
    gk = _gk(args.k)
    be = formats.load_book(args.book) if args.book else sqrt_book_layout(args.k, gk=gk)
    report = separation_audit(gk, be)
    if args.report:
        _emit(args.report, formats.dumps(report.to_json()))
    print(report.verdict.value)
    return EXIT_OK if report.verdict.value == "consistent" else EXIT_INVALID


def cmd_render(args) -> int:
    g = _plain(formats.load_graph(args.graph))
    if args.drawing:
        d = formats.load_drawing(args.drawing)
        report = validate_layered_drawing(g, d)
        svg = render_svg(g, d, conflicts=report.conflicts if args.highlight_conflicts else ())
    else:
        be = formats.load_book(args.book)
        report = validate_book_embedding(g, be)
        svg = render_book_svg(g, be, conflicts=report.conflicts if args.highlight_conflicts else ())
    if not report.valid:
        print(f"warning: certificate has {len(report.conflicts)} conflicts", file=sys.stderr)
    _emit(args.out, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gthick",
                                     description="Build and check thickness certificates for G_k.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-gk", help="write G_k as JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_gk)

    p = sub.add_parser("layout-theorem1", help="two-layer straight-line drawing of G_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_layout_theorem1)

    p = sub.add_parser("layout-sqrt", help="O(sqrt k)-page book embedding of G_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--block-size", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_layout_sqrt)

    p = sub.add_parser("validate-drawing", help="check a layered drawing")
    p.add_argument("--graph", required=True)
    p.add_argument("--drawing", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_validate_drawing)

    p = sub.add_parser("validate-book", help="check a book embedding")
    p.add_argument("--graph", required=True)
    p.add_argument("--book", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_validate_book)

    p = sub.add_parser("bt", help="exact book thickness of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-pages", type=int, default=8)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_bt)

    p = sub.add_parser("audit", help="page-pair coloring audit of a G_k book embedding")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--book")
    p.add_argument("--report")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("render", help="SVG of a drawing or book embedding")
    p.add_argument("--graph", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--drawing")
    src.add_argument("--book")
    p.add_argument("--out", required=True)
    p.add_argument("--highlight-conflicts", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, GeometryError, BookError, GraphError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
