"""Acceptance criteria 1-9, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (visible without
``-s``) and then asserts, so the pytest outcome and the printed line agree.
"""

import random
import time
import xml.etree.ElementTree as ET
from contextlib import contextmanager
from math import comb

import pytest

from gthick.book import (Answer, BookEmbedding, book_thickness_at_most, book_thickness_exact,
                         embed_on_circle, validate_book_embedding)
from gthick.geom import segments_conflict, validate_layered_drawing
from gthick.graph import build_gk, complete_graph
from gthick.layouts import ceil_sqrt, sqrt_book_layout, theorem1_layout
from gthick.render import render_svg
from gthick.separation import Verdict, is_planar, separation_audit

from conftest import random_graph
from oracles import naive_book_thickness, parametric_conflict

SVG = "{http://www.w3.org/2000/svg}"


@contextmanager
def criterion(capsys, number, title):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {number}: FAIL  {title}")
        raise
    with capsys.disabled():
        print(f"\ncriterion {number}: PASS  {title}")


def test_criterion_1_theorem1_two_layers(capsys):
    with criterion(capsys, 1, "two-layer drawing of G_k, k=5..40, k=40 < 2 s"):
        for k in range(5, 40):
            r = validate_layered_drawing(build_gk(k).graph, theorem1_layout(k))
            assert r.valid and r.layers_used == 2 and not r.conflicts, k
        start = time.perf_counter()
        gk = build_gk(40)
        r = validate_layered_drawing(gk.graph, theorem1_layout(40, gk))
        elapsed = time.perf_counter() - start
        assert gk.graph.m == 1560
        assert r.valid and r.layers_used == 2 and not r.conflicts
        assert elapsed < 2.0, elapsed


def test_criterion_2_counting(capsys):
    with criterion(capsys, 2, "|V(G_k)| = k + C(k,2), |E(G_k)| = 2 C(k,2), k=2..60"):
        for k in range(2, 61):
            g = build_gk(k).graph
            assert g.n == k + comb(k, 2)
            assert g.m == 2 * comb(k, 2)


def test_criterion_3_figure_svg(capsys):
    with criterion(capsys, 3, "SVG of theorem1_layout(8): 36 vertices, 56 segments, 2 groups"):
        gk = build_gk(8)
        d = theorem1_layout(8, gk)
        svg = render_svg(gk.graph, d)
        assert svg == render_svg(gk.graph, d)
        root = ET.fromstring(svg.split("\n", 1)[1])
        layers = [g for g in root.findall(f"{SVG}g") if g.get("class") == "layer"]
        assert len(layers) == 2
        assert sum(len(g.findall(f"{SVG}line")) for g in layers) == 56
        assert len(root.findall(f".//{SVG}line")) == 56
        assert len(root.findall(f".//{SVG}circle")) == 36


def test_criterion_4_exact_solver(capsys):
    with criterion(capsys, 4, "bt(K3..K6) = 1,2,3,3; solver = naive oracle on 100 graphs"):
        start = time.perf_counter()
        for k, expected in ((3, 1), (4, 2), (5, 3), (6, 3)):
            g = complete_graph(k)
            assert naive_book_thickness(g) == expected
            res = book_thickness_exact(g)
            assert res is not None and res.value == expected
            assert validate_book_embedding(g, res.upper.embedding).valid
        rng = random.Random(7)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7, 0.9]))
            expected = naive_book_thickness(g)
            res = book_thickness_exact(g)
            assert res is not None and res.value == expected, g
            # the decision version must agree on both sides of the optimum
            if expected >= 1:
                assert book_thickness_at_most(g, expected).answer is Answer.YES
            if expected >= 2:
                assert book_thickness_at_most(g, expected - 1).answer is Answer.NO
        assert time.perf_counter() - start < 60.0


def test_criterion_5_g5_needs_three_pages(capsys):
    with criterion(capsys, 5, "3 <= bt(G_5) <= pages_used(sqrt_book_layout(5))"):
        g5 = build_gk(5).graph
        assert not is_planar(g5)
        # a two-page answer for a nonplanar graph would be inconsistent
        assert book_thickness_at_most(g5, 2).answer is not Answer.YES
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(4, 8), 0.55)
            if book_thickness_at_most(g, 2).answer is Answer.YES:
                assert is_planar(g), g
        be = sqrt_book_layout(5)
        assert validate_book_embedding(g5, be).valid
        res = book_thickness_exact(g5, max_p=be.pages_used)
        assert res is not None
        assert 3 <= res.value <= be.pages_used


def test_criterion_6_sqrt_pages(capsys):
    with criterion(capsys, 6, "sqrt_book_layout valid within page bound, k=2..200, < 5 s"):
        start = time.perf_counter()
        for k in range(2, 201):
            gk = build_gk(k)
            be = sqrt_book_layout(k, gk=gk)
            r = validate_book_embedding(gk.graph, be)
            b = ceil_sqrt(k)
            assert r.valid, k
            assert r.pages_used <= b + -(-k // b), k
            if k == 100:
                assert r.pages_used <= 20
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, elapsed


@pytest.mark.parametrize("k", [10, 25, 40, 60])
def test_criterion_7_audit_consistent(capsys, k):
    with criterion(capsys, 7, f"audit of sqrt_book_layout({k}) is consistent, < 10 s"):
        start = time.perf_counter()
        gk = build_gk(k)
        report = separation_audit(gk, sqrt_book_layout(k, gk=gk))
        assert report.embedding_valid
        assert report.verdict is Verdict.CONSISTENT and report.mono_k5 is None
        assert time.perf_counter() - start < 10.0


def test_criterion_7_one_page_g5_contradiction(capsys):
    with criterion(capsys, 7, "one-page G_5 audit is a contradiction, < 10 s"):
        start = time.perf_counter()
        gk = build_gk(5)
        be = BookEmbedding(tuple(range(gk.graph.n)), (0,) * gk.graph.m)
        report = separation_audit(gk, be)
        assert not report.embedding_valid
        assert report.verdict is Verdict.CONTRADICTION
        assert tuple(report.mono_k5) == (0, 1, 2, 3, 4)
        assert time.perf_counter() - start < 10.0


def test_criterion_8_book_equals_geometry(capsys):
    with criterion(capsys, 8, "interleaving validation = parabola geometry, 200 instances"):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(2, 14)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            order = list(range(n))
            rng.shuffle(order)
            be = BookEmbedding(tuple(order), tuple(rng.randrange(4) for _ in g.edges))
            combinatorial = validate_book_embedding(g, be)
            geometric = validate_layered_drawing(g, embed_on_circle(g, be))
            assert set(combinatorial.conflicts) == set(geometric.conflicts)
            assert combinatorial.valid == geometric.valid


def test_criterion_9_predicate_exactness(capsys):
    with criterion(capsys, 9, "segments_conflict = rational oracle, 10,000 pairs"):
        rng = random.Random(9)

        def pt():
            return (rng.randint(-8, 8), rng.randint(-8, 8))

        def seg():
            while True:
                a, b = pt(), pt()
                if a != b:
                    return (a, b)

        disagreements = 0
        for i in range(10_000):
            a = seg()
            if i % 4 == 0:
                # force a shared endpoint so the touching cases get exercised
                b = (a[rng.randrange(2)], pt())
                if b[0] == b[1]:
                    b = seg()
            else:
                b = seg()
            shared = {p for p in a if p in b}
            for sh in (shared, frozenset()):
                if segments_conflict(a, b, sh) != parametric_conflict(a, b, sh):
                    disagreements += 1
        assert disagreements == 0
