"""Acceptance suite: one test per criterion, each with its own time budget.

Every test prints a PASS/FAIL line, and the terminal summary repeats them.
"""

import random
import time
from fractions import Fraction

import pytest

from interbody import linalg as la
from interbody.arrangement import enumerate_chambers
from interbody.convexity import (admissible_edge_positions, box_bounds, convexity_report_2d, gap_multiplier,
                                 gardner_check, midpoint_convexity_probe, parallelepiped_report,
                                 prism_slice_check, _box)
from interbody.exceptions import EmptySection
from interbody.polynomial import MPoly, x_names
from interbody.polytope import build_polygon, is_origin_symmetric, origin_position, translate
from interbody.radial import chamber_radial_piece, radial_oracle, radial_value
from interbody.translation import (affine_arrangement, radial_polynomial_in_t, random_point_in_region,
                                   random_regions, verify_cocircuit_stability)

from conftest import TRIANGLE, cube, icosahedron, polygon_corpus, random_polygon, random_simplex_3d, square, triangle

S3 = Fraction(433, 500)  # sqrt(3)/2 to three digits


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False

    def check(self, state):
        state["detail"] = f"({self.elapsed:.2f}s of {self.seconds}s)"
        assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def symmetric_octagon(rng):
    while True:
        P = random_polygon(rng, n=8, symmetric=True, scale=9)
        if P.n_vertices == 8:
            return P


# -- 1 -------------------------------------------------------------------------------------

@pytest.mark.criterion(1, "Gardner identity on symmetric polygons")
def test_c01_gardner(criterion):
    polys = [
        square(),
        build_polygon([(-3, -1), (3, -1), (3, 1), (-3, 1)]),
        build_polygon([(-Fraction(1, 2), -5), (Fraction(1, 2), -5), (Fraction(1, 2), 5), (-Fraction(1, 2), 5)]),
        build_polygon([(1, 0), (Fraction(1, 2), S3), (-Fraction(1, 2), S3), (-1, 0),
                       (-Fraction(1, 2), -S3), (Fraction(1, 2), -S3)]),
        symmetric_octagon(random.Random(11)),
    ]
    with Budget(1.0) as b:
        results = [gardner_check(P) for P in polys]
    assert all(results), results
    b.check(criterion)


# -- 2 -------------------------------------------------------------------------------------

@pytest.mark.criterion(2, "planar verdict equals (origin interior and P = -P)")
def test_c02_classification(criterion):
    with Budget(10.0) as b:
        corpus = polygon_corpus(seed=2024, count=60)
        tags = set()
        for P in corpus:
            pos = origin_position(P)
            tags.add(pos.tag)
            sym = is_origin_symmetric(P)
            rep = convexity_report_2d(P)
            assert rep.convex == (pos.is_interior and sym)
            if rep.verdict == "NonConvex" and pos.is_interior:
                if any(not c.parallel_edges for c in rep.per_chamber):
                    w = rep.witness
                    assert w is not None
                    assert la.norm2(w.q) > la.norm2(w.p_ab)
    assert tags == {"Interior", "FacetInterior", "LowerFace", "Outside"}
    b.check(criterion)


# -- 3 -------------------------------------------------------------------------------------

@pytest.mark.criterion(3, "witness gap multiplier")
def test_c03_witness_formula(criterion):
    rng = random.Random(3)
    with Budget(1.0) as b:
        assert gap_multiplier(1, 2) == Fraction(1, 30)
        for _ in range(100):
            al = Fraction(rng.randint(1, 400), rng.randint(1, 40))
            be = al
            while be == al:
                be = Fraction(rng.randint(1, 400), rng.randint(1, 40))
            m = gap_multiplier(al, be)
            assert m == (al - be) ** 2 / (2 * (2 + al + be) * (al + be))
            # brute force in coordinates with random chord directions a, b
            a = (Fraction(rng.randint(-50, 50)), Fraction(rng.randint(1, 50)))
            bb = (Fraction(rng.randint(-50, 50)), Fraction(rng.randint(1, 50)))
            r = la.rot90(la.add(a, bb))
            if la.is_zero(r):
                continue
            p_ab = la.scale(Fraction(1, 2) + al * be / (al + be), r)
            q = la.scale((1 + al) * (1 + be) / (2 + al + be), r)
            assert la.sub(q, p_ab) == la.scale(m, r)
            assert la.norm2(q) - la.norm2(p_ab) > 0
            ratio = la.norm2(q) / la.norm2(p_ab)
            c_p = Fraction(1, 2) + al * be / (al + be)
            assert ratio == ((c_p + m) / c_p) ** 2
    b.check(criterion)


# -- 4 -------------------------------------------------------------------------------------

@pytest.mark.criterion(4, "exact radial function agrees with the float oracle")
def test_c04_oracle(criterion):
    rng = random.Random(4)
    bodies = {
        "triangle": triangle(), "square": square(), "square02": square(0, 2),
        "cube": cube(), "cube02": cube(0, 2), "simplex": random_simplex_3d(random.Random(44)),
    }
    worst = 0.0
    with Budget(30.0) as b:
        for name, P in bodies.items():
            for _ in range(1000):
                x = tuple(Fraction(rng.randint(-10 ** 4, 10 ** 4), 10 ** 3) for _ in range(P.dim))
                if la.is_zero(x):
                    continue
                exact = radial_value(P, x)
                try:
                    ref = radial_oracle(P, x)
                except EmptySection:
                    assert exact == 0, name
                    continue
                if ref == 0:
                    assert exact == 0, name
                    continue
                err = abs(float(exact) - ref) / ref
                worst = max(worst, err)
                assert err <= 1e-9, (name, x, exact, ref)
    b.check(criterion)
    criterion["detail"] += f" max rel err {worst:.1e}"


# -- 5 -------------------------------------------------------------------------------------

@pytest.mark.criterion(5, "divisibility and line/conic dichotomy")
def test_c05_divisibility(criterion):
    names = x_names(2)
    n2 = MPoly.norm_squared(names)
    mismatches = []
    with Budget(10.0) as b:
        for k, P in enumerate(polygon_corpus(seed=2024, count=60)):
            for C in enumerate_chambers(P):
                try:
                    piece = chamber_radial_piece(P, C)
                except EmptySection:
                    continue
                assert piece.p.divmod(n2)[1].is_zero()
                edges = C.crossed_edges
                parallel = len(edges) == 2 and la.cross2(
                    la.sub(P.vertices[edges[0][1]], P.vertices[edges[0][0]]),
                    la.sub(P.vertices[edges[1][1]], P.vertices[edges[1][0]])) == 0
                deg = piece.boundary.degree()
                ok = deg == 1 if parallel else (deg == 2 and piece.boundary.constant_term() == 0)
                if not ok:
                    mismatches.append((k, origin_position(P).tag, str(C.cocircuit), deg))
    b.check(criterion)
    criterion["detail"] += f" {len(mismatches)} chamber(s) break the dichotomy"
    assert not mismatches, f"dichotomy fails on {len(mismatches)} chambers, e.g. {mismatches[:5]}"


# -- 6 -------------------------------------------------------------------------------------

def cocircuits_in_vertex_order(P, order):
    """Chamber sign vectors listed in the order of the given vertex coordinates."""
    idx = [P.vertices.index(tuple(Fraction(c) for c in v)) for v in order]
    return {"".join("+" if C.cocircuit[i] > 0 else "-" for i in idx) for C in enumerate_chambers(P)}


@pytest.mark.criterion(6, "cocircuit stability and the worked triangle")
def test_c06_cocircuits(criterion):
    with Budget(5.0) as b:
        P = triangle()
        assert cocircuits_in_vertex_order(P, TRIANGLE) == {"+-+", "+--", "++-", "-+-", "-++", "--+"}
        t1 = (0, 2)
        moved = [(x + t1[0], y + t1[1]) for x, y in TRIANGLE]
        assert cocircuits_in_vertex_order(translate(P, t1), moved) == {"+-+", "+++", "++-", "-+-", "---", "--+"}

        L = affine_arrangement(P)
        assert {(h.normal, h.offset) for h in L} == {((0, 1), 1), ((2, -1), 1), ((2, 1), -1)}

        rng = random.Random(6)
        regions = random_regions(P, 5, rng)
        assert len(regions) == 5
        for r in regions:
            for _ in range(20):
                t_a = random_point_in_region(L, r, rng)
                t_b = random_point_in_region(L, r, rng)
                assert verify_cocircuit_stability(P, t_a, t_b)
    b.check(criterion)


# -- 7 -------------------------------------------------------------------------------------

@pytest.mark.criterion(7, "radial function is polynomial of degree <= d-1 in t")
def test_c07_degree_in_t(criterion):
    rng = random.Random(7)
    triples = 0
    with Budget(30.0) as b:
        for P in polygon_corpus(seed=2024, count=60):
            for r in random_regions(P, 2, rng):
                Pt = translate(P, r.witness_t)
                for C in enumerate_chambers(Pt):
                    poly = radial_polynomial_in_t(P, r, C.cocircuit, C.witness, held_out=5, seed=triples)
                    assert poly.degree() <= 1
                    triples += 1
        K = cube()
        for r in random_regions(K, 2, rng, box=1):
            Kt = translate(K, r.witness_t)
            for C in enumerate_chambers(Kt)[:6]:
                poly = radial_polynomial_in_t(K, r, C.cocircuit, C.witness, held_out=5, seed=triples)
                assert poly.degree() <= 2
                triples += 1
    b.check(criterion)
    criterion["detail"] += f" {triples} triples"


# -- 8 -------------------------------------------------------------------------------------

@pytest.mark.criterion(8, "prism slice identity")
def test_c08_prism(criterion):
    with Budget(10.0) as b:
        assert prism_slice_check(square(0, 2), 0, 2, 200, seed=8)
        assert prism_slice_check(triangle(), -1, 1, 200, seed=8)
        L = random_polygon(random.Random(88))
        assert prism_slice_check(L, Fraction(-3, 2), Fraction(1, 3), 200, seed=8)
    b.check(criterion)


# -- 9 -------------------------------------------------------------------------------------

@pytest.mark.criterion(9, "parallelepiped verdicts")
def test_c09_boxes(criterion):
    rng = random.Random(9)
    with Budget(5.0) as b:
        for n in range(50):
            d = 2 + n % 2
            bounds = []
            for _ in range(d):
                if rng.random() < 0.4:
                    h = Fraction(rng.randint(1, 9), rng.randint(1, 3))
                    bounds.append((-h, h))
                else:
                    lo = Fraction(rng.randint(-9, 5), rng.randint(1, 3))
                    bounds.append((lo, lo + Fraction(rng.randint(1, 9), rng.randint(1, 3))))
            P = _box(bounds)
            sym = all(lo == -hi for lo, hi in box_bounds(P))
            rep = parallelepiped_report(P)
            assert rep.convex == sym
            if sym:
                continue
            assert len(rep.slice_chain) == d - 2
            assert rep.base_report is not None and rep.base_report.verdict == "NonConvex"
            cur = list(box_bounds(P))
            for step in rep.slice_chain:
                lo, hi = cur[step.axis]
                assert step.height == hi - lo
                base = tuple(cur[:step.axis] + cur[step.axis + 1:])
                assert base == step.base_bounds
                K, L = _box(cur), _box(base)
                u = (Fraction(rng.randint(-99, 99)), Fraction(rng.randint(1, 99)))
                v = u[:step.axis] + (Fraction(0),) + u[step.axis:]
                assert radial_value(K, v) == step.height * radial_value(L, u)
                cur = list(base)
    b.check(criterion)


# -- 10 ------------------------------------------------------------------------------------

@pytest.mark.criterion(10, "admissible origin positions on edges")
def test_c10_admissible(criterion):
    with Budget(1.0) as b:
        counts = {
            "parallelogram": len(admissible_edge_positions(build_polygon([(0, 0), (4, 0), (5, 2), (1, 2)]))),
            "acute": len(admissible_edge_positions(build_polygon([(0, 0), (4, 0), (2, 3)]))),
            "obtuse": len(admissible_edge_positions(build_polygon([(0, 0), (6, 0), (1, 1)]))),
            "hexagon": len(admissible_edge_positions(build_polygon(
                [(1, 0), (Fraction(1, 2), S3), (-Fraction(1, 2), S3), (-1, 0),
                 (-Fraction(1, 2), -S3), (Fraction(1, 2), -S3)]))),
        }
    b.check(criterion)
    criterion["detail"] += f" counts {counts}"
    assert counts["parallelogram"] == 4
    assert counts["acute"] == 3
    assert counts["hexagon"] == 0
    assert counts["obtuse"] < 3


# -- 11 ------------------------------------------------------------------------------------

@pytest.mark.criterion(11, "midpoint convexity probe")
def test_c11_probe(criterion):
    with Budget(60.0) as b:
        assert midpoint_convexity_probe(square(0, 2), 1000, seed=0).violator is not None
        for P in (square(), cube(), icosahedron()):
            res = midpoint_convexity_probe(P, 1000, seed=0)
            assert res.violator is None and res.min_margin >= 0
    b.check(criterion)
