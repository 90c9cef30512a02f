import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from interbody import linalg as la
from interbody.exceptions import DegenerateInput, EmptySection, InvalidCombinatorics, ZeroDirection
from interbody.io import parse_polytope, polytope_to_dict, dumps
from interbody.polytope import (build_polygon, build_polytope, cross_section, is_origin_symmetric,
                                origin_position, section_points, translate)

from conftest import cube, icosahedron, random_polygon, square, triangle


def test_polygon_is_ccw_and_drops_interior_points():
    P = build_polygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])
    assert P.n_vertices == 4
    assert len(P.edges) == 4
    n = P.n_vertices
    area2 = sum(la.cross2(P.vertices[i], P.vertices[(i + 1) % n]) for i in range(n))
    assert area2 > 0


def test_collinear_polygon_rejected():
    with pytest.raises(DegenerateInput):
        build_polygon([(0, 0), (1, 1), (2, 2)])


def test_cube_combinatorics():
    C = cube(0, 2)
    assert (C.n_vertices, len(C.edges), len(C.facets)) == (8, 12, 6)


def test_icosahedron_combinatorics():
    I = icosahedron()
    assert (I.n_vertices, len(I.edges), len(I.facets)) == (12, 30, 20)
    assert is_origin_symmetric(I)


def test_non_extreme_vertex_rejected():
    verts = [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2), (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))]
    with pytest.raises(InvalidCombinatorics):
        build_polytope(verts, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def test_origin_positions():
    assert origin_position(square()).tag == "Interior"
    assert origin_position(translate(square(), (1, 0))).tag == "FacetInterior"
    pos = origin_position(translate(square(), (1, 1)))
    assert pos.tag == "LowerFace" and len(pos.face) == 1
    assert origin_position(translate(square(), (5, 0))).tag == "Outside"
    assert origin_position(translate(cube(), (1, 1, 0))).tag == "LowerFace"


def test_triangle_section_exact():
    pts = cross_section(triangle(), (2, 1))
    assert set(pts) == {(Fraction(1, 2), Fraction(-1)), (Fraction(-1, 4), Fraction(1, 2))}


def test_section_errors():
    with pytest.raises(ZeroDirection):
        cross_section(square(), (0, 0))
    with pytest.raises(EmptySection):
        cross_section(translate(square(), (5, 5)), (1, 1))


def test_vertex_on_hyperplane_reported_once():
    pts = section_points(square(), (1, 1))
    assert sorted(src[0] for _, src in pts) == ["vertex", "vertex"]


@given(st.integers(0, 10 ** 6), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_cube_section_points_lie_on_plane_and_in_cube(seed, a, b, c):
    x = (Fraction(a), Fraction(b), Fraction(c))
    if la.is_zero(x):
        return
    C = cube()
    for p in cross_section(C, x):
        assert la.dot(p, x) == 0
        assert all(-1 <= t <= 1 for t in p)


def test_section_of_cube_is_cyclic_convex():
    pts = cross_section(cube(), (1, 1, 1))
    assert len(pts) == 6
    x = (1, 1, 1)
    k = len(pts)
    for i in range(k):
        a, b, c = pts[i], pts[(i + 1) % k], pts[(i + 2) % k]
        assert la.det([la.sub(b, a), la.sub(c, b), x]) > 0


def test_json_round_trip():
    rng = random.Random(3)
    for P in [random_polygon(rng) for _ in range(5)] + [cube(0, 2), icosahedron()]:
        text = dumps(polytope_to_dict(P))
        Q = parse_polytope(text)
        assert Q.vertices == P.vertices
        assert Q.edges == P.edges
        assert dumps(polytope_to_dict(Q)) == text
