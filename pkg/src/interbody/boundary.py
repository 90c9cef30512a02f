"""Sampling the boundary of IP along rational directions."""

from __future__ import annotations

import math
from fractions import Fraction

from . import linalg as la
from .linalg import Vec
from .polytope import Polytope, build_polytope
from .radial import radial_value

MIN_SAMPLES = 8

# integer icosahedron (0, ±55, ±89) and cyclic shifts; 89/55 approximates
# the golden ratio, so these are icosahedral up to a tiny distortion
_P, _Q = 55, 89


def _rational(c: float) -> Fraction:
    return Fraction(c).limit_denominator(10 ** 6)


def circle_directions(n: int) -> list[Vec]:
    """``n`` rational directions at angles ``2 pi k / n`` (coordinates rounded)."""
    out = []
    for k in range(n):
        th = 2 * math.pi * k / n
        out.append((_rational(math.cos(th)), _rational(math.sin(th))))
    return out


def boundary_points_2d(P: Polytope, n: int) -> list[tuple[Vec, Vec]]:
    """(direction, boundary point ``rho(u) u``) pairs; exact rationals."""
    if n < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    return [(u, la.scale(radial_value(P, u), u)) for u in circle_directions(n)]


def icosphere(level: int) -> tuple[list[Vec], list[tuple[int, int, int]]]:
    """Integer icosahedron subdivided ``level`` times (midpoints left unprojected).

    Faces are oriented counterclockwise seen from outside.
    """
    base = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base += [(0, s1 * _P, s2 * _Q), (s1 * _P, s2 * _Q, 0), (s2 * _Q, 0, s1 * _P)]
    ico = build_polytope(base)
    verts = list(ico.vertices)
    faces = []
    for f in ico.facets:
        i, j, k = f.vertices
        if la.det([verts[i], verts[j], verts[k]]) < 0:
            j, k = k, j
        faces.append((i, j, k))
    for _ in range(level):
        index = {v: n for n, v in enumerate(verts)}

        def mid(a, b):
            m = la.scale(Fraction(1, 2), la.add(verts[a], verts[b]))
            if m not in index:
                index[m] = len(verts)
                verts.append(m)
            return index[m]

        new = []
        for a, b, c in faces:
            ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
            new += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new
    return verts, faces


def boundary_mesh_3d(P: Polytope, n: int) -> tuple[list[Vec], list[Vec], list[tuple[int, int, int]]]:
    """(directions, boundary points, faces) from the coarsest icosphere with >= n vertices."""
    if n < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    level = 0
    while 10 * 4 ** level + 2 < n:
        level += 1
    dirs, faces = icosphere(level)
    pts = [la.scale(radial_value(P, u), u) for u in dirs]
    return dirs, pts, faces
