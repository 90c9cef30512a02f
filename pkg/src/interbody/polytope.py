"""Polytopes with exact rational vertices, and their hyperplane sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .exceptions import DegenerateInput, EmptySection, InvalidCombinatorics, ZeroDirection
from .linalg import Vec


@dataclass(frozen=True)
class Facet:
    """A facet ``{y : <normal, y> = offset}`` with P on the side ``>= offset``."""
    vertices: tuple[int, ...]
    normal: Vec
    offset: Fraction


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple[Vec, ...]
    edges: tuple[tuple[int, int], ...]
    facets: tuple[Facet, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def edge_vectors(self, k: int) -> tuple[Vec, Vec]:
        i, j = self.edges[k]
        return self.vertices[i], self.vertices[j]


@dataclass(frozen=True)
class OriginPosition:
    """Where the origin sits relative to a polytope.

    ``tag`` is one of ``"Interior"``, ``"FacetInterior"``, ``"LowerFace"``,
    ``"Outside"``. ``facet`` is set for FacetInterior, ``face`` (vertex
    indices of the smallest face containing the origin) for LowerFace.
    """
    tag: str
    facet: int | None = None
    face: tuple[int, ...] | None = None

    @property
    def is_interior(self) -> bool:
        return self.tag == "Interior"


# -- construction -----------------------------------------------------------

def _hull_2d(points: list[Vec]) -> list[Vec]:
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and la.cross2(la.sub(out[-1], out[-2]), la.sub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def build_polygon(vertices: Sequence[Sequence]) -> Polytope:
    """Convex hull of planar points, counterclockwise from the lexicographic minimum."""
    pts = [la.vec(p) for p in vertices]
    if any(len(p) != 2 for p in pts):
        raise DegenerateInput("build_polygon expects 2D points")
    hull = _hull_2d(pts)
    if len(hull) < 3:
        raise DegenerateInput("points are collinear or too few")
    n = len(hull)
    edges = tuple((i, (i + 1) % n) for i in range(n))
    facets = []
    for i, j in edges:
        normal = la.rot90(la.sub(hull[j], hull[i]))
        facets.append(Facet((i, j), normal, la.dot(normal, hull[i])))
    return Polytope(2, tuple(hull), edges, tuple(facets))


def _facet_plane(points: list[Vec], d: int) -> tuple[Vec, Fraction] | None:
    base = points[0]
    diffs = [la.sub(p, base) for p in points[1:]]
    ns = la.nullspace(diffs, d)
    if len(ns) != 1:
        return None
    normal = la.primitive(ns[0])
    return normal, la.dot(normal, base)


def _hull_3d(pts: list[Vec]) -> list[tuple[int, ...]]:
    # Brute force over triples; fine for the desk-sized inputs this targets.
    planes = {}
    n = len(pts)
    for i, j, k in combinations(range(n), 3):
        plane = _facet_plane([pts[i], pts[j], pts[k]], 3)
        if plane is None:
            continue
        normal, off = plane
        vals = [la.dot(normal, p) - off for p in pts]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            on = tuple(m for m in range(n) if vals[m] == 0)
            planes.setdefault(on, None)
    return sorted(planes)


def build_polytope(vertices: Sequence[Sequence], facets: Sequence[Sequence[int]] | None = None) -> Polytope:
    """Validated polytope from a V-description plus facet vertex sets.

    For ``d == 3`` the facets may be omitted and are then computed. For
    ``d == 2`` this defers to :func:`build_polygon`.
    """
    pts = [la.vec(p) for p in vertices]
    if not pts:
        raise DegenerateInput("no vertices")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise DegenerateInput("inconsistent vertex dimensions")
    if d == 2:
        return build_polygon(pts)
    if len(set(pts)) != len(pts):
        raise InvalidCombinatorics("duplicate vertices")
    if la.rank([la.sub(p, pts[0]) for p in pts[1:]]) != d:
        raise DegenerateInput("vertices are not full-dimensional")
    if facets is None:
        if d != 3:
            raise InvalidCombinatorics("facets must be supplied for d >= 4")
        facets = _hull_3d(pts)

    facet_objs = []
    for fs in facets:
        idx = tuple(sorted(set(int(i) for i in fs)))
        if len(idx) < d or any(i < 0 or i >= len(pts) for i in idx):
            raise InvalidCombinatorics(f"facet {list(fs)} has too few or invalid vertices")
        plane = _facet_plane([pts[i] for i in idx], d)
        if plane is None:
            raise InvalidCombinatorics(f"facet {list(fs)} is not a hyperplane section")
        normal, off = plane
        vals = [la.dot(normal, p) - off for p in pts]
        if any(vals[i] != 0 for i in idx):
            raise InvalidCombinatorics(f"facet {list(fs)} vertices are not coplanar")
        if any(v < 0 for v in vals):
            normal, off = la.neg(normal), -off
            vals = [-v for v in vals]
        if any(v < 0 for v in vals):
            raise InvalidCombinatorics(f"facet {list(fs)} does not support the polytope")
        if any(v == 0 and i not in idx for i, v in enumerate(vals)):
            raise InvalidCombinatorics(f"facet {list(fs)} misses a coplanar vertex")
        facet_objs.append(Facet(idx, normal, off))

    incident = [[f for f in facet_objs if i in f.vertices] for i in range(len(pts))]
    for i, fs in enumerate(incident):
        if la.rank([f.normal for f in fs]) != d:
            raise InvalidCombinatorics(f"vertex {i} is not extreme")

    edges = []
    for i, j in combinations(range(len(pts)), 2):
        common = [f for f in incident[i] if j in f.vertices]
        if len(common) < d - 1:
            continue
        face = set(common[0].vertices)
        for f in common[1:]:
            face &= set(f.vertices)
        if face == {i, j}:
            edges.append((i, j))
    return Polytope(d, tuple(pts), tuple(edges), tuple(facet_objs))


def translate(P: Polytope, t: Sequence) -> Polytope:
    t = la.vec(t)
    if len(t) != P.dim:
        raise ValueError("translation dimension mismatch")
    verts = tuple(la.add(v, t) for v in P.vertices)
    facets = tuple(Facet(f.vertices, f.normal, f.offset + la.dot(f.normal, t)) for f in P.facets)
    return Polytope(P.dim, verts, P.edges, facets)


def origin_position(P: Polytope) -> OriginPosition:
    # facet inequality at the origin reads 0 >= offset
    if any(f.offset > 0 for f in P.facets):
        return OriginPosition("Outside")
    tight = [k for k, f in enumerate(P.facets) if f.offset == 0]
    if not tight:
        return OriginPosition("Interior")
    if len(tight) == 1:
        return OriginPosition("FacetInterior", facet=tight[0])
    face = set(P.facets[tight[0]].vertices)
    for k in tight[1:]:
        face &= set(P.facets[k].vertices)
    return OriginPosition("LowerFace", face=tuple(sorted(face)))


def is_origin_symmetric(P: Polytope) -> bool:
    verts = set(P.vertices)
    return all(la.neg(v) in verts for v in verts)


# -- sections ----------------------------------------------------------------

def section_points(P: Polytope, x: Vec) -> list[tuple[Vec, tuple[str, int]]]:
    """Vertices of ``P ∩ x⊥`` tagged by origin: ``("edge", k)`` or ``("vertex", i)``.

    Unordered. Edges are used only when crossed transversally, so a vertex
    of P lying on the hyperplane is reported exactly once.
    """
    vals = [la.dot(v, x) for v in P.vertices]
    out = [(P.vertices[i], ("vertex", i)) for i, h in enumerate(vals) if h == 0]
    for k, (i, j) in enumerate(P.edges):
        hi, hj = vals[i], vals[j]
        if (hi > 0 and hj < 0) or (hi < 0 and hj > 0):
            a, b = P.vertices[i], P.vertices[j]
            # (<b,x> a - <a,x> b) / <b - a, x>
            den = hj - hi
            out.append((tuple((hj * ai - hi * bi) / den for ai, bi in zip(a, b)), ("edge", k)))
    return out


def _projection_axis(x: Vec) -> int:
    return max(range(len(x)), key=lambda k: abs(x[k]))


def order_section(points: list, x: Vec, key=lambda item: item) -> list:
    """Order section vertices: along the line for d=2, cyclically for d=3.

    For d=3 the order is counterclockwise seen from the tip of ``x``;
    points not in convex position (which a section never produces) are
    dropped by the hull.
    """
    d = len(x)
    if d == 2:
        r = la.rot90(x)
        return sorted(points, key=lambda it: la.dot(key(it), r))
    if d != 3:
        raise NotImplementedError("sections are ordered only for d <= 3")
    axis = _projection_axis(x)
    proj = {}
    for it in points:
        p = key(it)
        proj.setdefault(tuple(c for k, c in enumerate(p) if k != axis), it)
    hull = _hull_2d(list(proj))
    ordered = [proj[h] for h in hull]
    if len(ordered) >= 3:
        p0, p1, p2 = (key(ordered[0]), key(ordered[1]), key(ordered[2]))
        if la.det([la.sub(p1, p0), la.sub(p2, p0), x]) < 0:
            ordered.reverse()
    return ordered


def cross_section(P: Polytope, x: Sequence) -> list[Vec]:
    """Vertices of ``P ∩ x⊥``; raises EmptySection when the hyperplane misses P."""
    x = la.vec(x)
    if la.is_zero(x):
        raise ZeroDirection("x must be nonzero")
    pts = section_points(P, x)
    if not pts:
        raise EmptySection("hyperplane misses the polytope")
    return [p for p, _ in order_section(pts, x, key=lambda it: it[0])]
