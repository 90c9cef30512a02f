"""Convexity verdicts and certificates for intersection bodies of polytopes.

Planar polygons get a full decision (convex exactly for origin-symmetric
polygons) with an explicit non-convexity witness; boxes are decided in any
dimension by slicing down to a planar face; everything else only gets the
sampled midpoint probe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg as la
from .arrangement import Chamber, cocircuit_of, enumerate_chambers, sector_point
from .exceptions import NotABox, NotSymmetric, OnWall, ParallelEdges
from .linalg import Vec
from .polytope import (OriginPosition, Polytope, build_polygon, build_polytope, is_origin_symmetric,
                       origin_position, section_points)
from .radial import chamber_radial_piece, radial_value

__all__ = [
    "Witness", "ChamberClass", "SliceStep", "ConvexityReport", "ProbeResult",
    "is_origin_symmetric", "gap_multiplier", "convexity_report_2d", "nonconvexity_witness",
    "gardner_check", "prism", "prism_slice_check", "box_bounds", "parallelepiped_report",
    "admissible_edge_positions", "midpoint_convexity_probe",
]


@dataclass(frozen=True)
class Witness:
    """Two boundary points of IP whose midchord leaves IP.

    ``a``, ``b`` lie on one crossed edge and ``-alpha a``, ``-beta b`` on the
    other; ``q`` is where the chord ``[p_a, p_b]`` meets the ray through
    ``p_ab``. ``gap`` is the multiplier m with ``|q| - |p_ab| = m |a + b|``.
    """
    chamber: Chamber
    a: Vec
    b: Vec
    alpha: Fraction
    beta: Fraction
    p_a: Vec
    p_b: Vec
    p_ab: Vec
    q: Vec
    gap: Fraction

    def is_valid(self) -> bool:
        return la.norm2(self.q) > la.norm2(self.p_ab)


@dataclass(frozen=True)
class ChamberClass:
    chamber: Chamber
    piece_degree: int
    parallel_edges: bool


@dataclass(frozen=True)
class SliceStep:
    """Dropping coordinate ``axis`` turns the box into a prism of height ``height``."""
    axis: int
    height: Fraction
    base_bounds: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class ConvexityReport:
    verdict: str                              # "Convex" | "NonConvex" | "Undetermined"
    reason: str | None
    symmetric: bool
    origin: OriginPosition
    witness: Witness | None = None
    facet: int | None = None
    per_chamber: tuple[ChamberClass, ...] = ()
    slice_chain: tuple[SliceStep, ...] = ()
    asymmetric_axis: int | None = None
    base_report: ConvexityReport | None = None
    probe: ProbeResult | None = None

    @property
    def convex(self) -> bool:
        return self.verdict == "Convex"


@dataclass(frozen=True)
class ProbeResult:
    min_margin: float
    violator: tuple[Vec, Vec] | None
    pairs: int = field(default=0)


# -- planar decision ------------------------------------------------------------------

def gap_multiplier(alpha, beta) -> Fraction:
    alpha, beta = la.rat(alpha), la.rat(beta)
    return (alpha - beta) ** 2 / (2 * (2 + alpha + beta) * (alpha + beta))


def _edges_parallel(P: Polytope, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    d1 = la.sub(P.vertices[e1[1]], P.vertices[e1[0]])
    d2 = la.sub(P.vertices[e2[1]], P.vertices[e2[0]])
    return la.cross2(d1, d2) == 0


def _classify(P: Polytope, C: Chamber) -> ChamberClass:
    piece = chamber_radial_piece(P, C)
    par = len(C.crossed_edges) == 2 and _edges_parallel(P, *C.crossed_edges)
    return ChamberClass(C, piece.boundary.degree(), par)


def _rot(u: Vec) -> Vec:
    # (u2, -u1): the direction whose orthogonal line contains u
    return (u[1], -u[0])


def _chord_points(P: Polytope, u: Vec, edge_ids: dict) -> dict:
    out = {}
    for p, src in section_points(P, u):
        if src[0] == "edge":
            out[edge_ids[src[1]]] = p
    return out


def nonconvexity_witness(P: Polytope, C: Chamber) -> Witness:
    """Certificate that IP is not convex, built inside a non-parallel chamber."""
    if P.dim != 2 or not origin_position(P).is_interior:
        raise ValueError("witness needs a polygon with the origin in its interior")
    if len(C.crossed_edges) != 2:
        raise ValueError("chamber must cross exactly two edges")
    e1, e2 = C.crossed_edges
    if _edges_parallel(P, e1, e2):
        raise ParallelEdges(f"edges {e1} and {e2} are parallel")
    edge_ids = {k: P.edges[k] for k in range(len(P.edges))}

    u_a = C.witness
    # rotate toward a wall by a quarter of the way; halve until inside the chamber
    u_b = sector_point(C, Fraction(1, 4)) if C.rays else la.add(u_a, la.scale(Fraction(1, 4), la.rot90(u_a)))
    while True:
        try:
            if cocircuit_of(P, u_b) == C.cocircuit:
                break
        except OnWall:
            pass
        u_b = la.add(u_a, la.scale(Fraction(1, 2), la.sub(u_b, u_a)))

    pts_a = _chord_points(P, u_a, edge_ids)
    pts_b = _chord_points(P, u_b, edge_ids)
    # l1 is the edge whose point a has rot(a) pointing into the chamber
    first, second = e1, e2
    if la.dot(_rot(pts_a[e1]), u_a) < 0:
        first, second = e2, e1
    a, b = pts_a[first], pts_b[first]
    alpha = _ratio(pts_a[second], a)
    beta = _ratio(pts_b[second], b)
    ab = la.add(a, b)
    p_a = la.scale(1 + alpha, _rot(a))
    p_b = la.scale(1 + beta, _rot(b))
    p_ab = la.scale(Fraction(1, 2) + alpha * beta / (alpha + beta), _rot(ab))
    q = la.scale((1 + alpha) * (1 + beta) / (2 + alpha + beta), _rot(ab))
    return Witness(C, a, b, alpha, beta, p_a, p_b, p_ab, q, gap_multiplier(alpha, beta))


def _ratio(p: Vec, a: Vec) -> Fraction:
    """The alpha > 0 with p = -alpha * a."""
    k = 0 if a[0] != 0 else 1
    return -p[k] / a[k]


def convexity_report_2d(P: Polytope) -> ConvexityReport:
    if P.dim != 2:
        raise ValueError("convexity_report_2d needs a polygon")
    sym = is_origin_symmetric(P)
    pos = origin_position(P)
    if pos.tag == "FacetInterior":
        return ConvexityReport("NonConvex", "DiscontinuityAtFacet", sym, pos, facet=pos.facet)
    if not pos.is_interior:
        return ConvexityReport("NonConvex", "OriginOutsideOrLowFace", sym, pos)
    classes = tuple(_classify(P, C) for C in enumerate_chambers(P))
    if sym:
        return ConvexityReport("Convex", "CentrallySymmetric", sym, pos, per_chamber=classes)
    for cc in classes:
        if not cc.parallel_edges:
            w = nonconvexity_witness(P, cc.chamber)
            return ConvexityReport("NonConvex", "Witness", sym, pos, witness=w, per_chamber=classes)
    raise AssertionError("asymmetric polygon with only parallel chambers")


def gardner_check(P: Polytope) -> bool:
    """Every chamber piece of IP is the quarter-turned, doubled matching edge of P."""
    if P.dim != 2:
        raise ValueError("gardner_check needs a polygon")
    if not is_origin_symmetric(P):
        raise NotSymmetric("polygon is not origin-symmetric")
    for C in enumerate_chambers(P):
        piece = chamber_radial_piece(P, C)
        if piece.boundary.degree() != 1:
            return False
        edge = _matching_edge(P, C)
        ends = {la.scale(2, la.rot90(P.vertices[i])) for i in edge}
        if any(piece.boundary(p) != 0 for p in ends):
            return False
        if set(piece_endpoints(P, C)) != ends:
            return False
    return True


def _matching_edge(P: Polytope, C: Chamber) -> tuple[int, int]:
    edge_ids = dict(enumerate(P.edges))
    for p, src in section_points(P, C.witness):
        if src[0] == "edge" and la.dot(la.rot90(p), C.witness) > 0:
            return edge_ids[src[1]]
    raise AssertionError("no section point on the chamber side")


def piece_endpoints(P: Polytope, C: Chamber) -> list[Vec]:
    """Boundary points of IP on the two walls of a planar chamber."""
    return [la.scale(radial_value(P, r), r) for r in C.rays]


# -- prisms and boxes -----------------------------------------------------------------------

def prism(L: Polytope, a, b) -> Polytope:
    """``L x [a, b]`` with facets lifted from L plus bottom and top."""
    a, b = la.rat(a), la.rat(b)
    n = L.n_vertices
    verts = [v + (a,) for v in L.vertices] + [v + (b,) for v in L.vertices]
    facets = [tuple(f.vertices) + tuple(i + n for i in f.vertices) for f in L.facets]
    facets += [tuple(range(n)), tuple(range(n, 2 * n))]
    return build_polytope(verts, facets)


def prism_slice_check(L: Polytope, a, b, samples: int, seed: int = 0) -> bool:
    a, b = la.rat(a), la.rat(b)
    if not a < b:
        raise ValueError("need a < b")
    K = prism(L, a, b)
    rng = random.Random(seed)
    for _ in range(samples):
        u = _random_direction(rng, L.dim)
        if radial_value(K, u + (Fraction(0),)) != (b - a) * radial_value(L, u):
            return False
    return True


def box_bounds(P: Polytope) -> tuple[tuple[Fraction, Fraction], ...]:
    d = P.dim
    bounds = tuple((min(v[k] for v in P.vertices), max(v[k] for v in P.vertices)) for k in range(d))
    corners = set(product(*bounds))
    if P.n_vertices != 2 ** d or set(P.vertices) != corners:
        raise NotABox("polytope is not an axis-aligned box")
    return bounds


def _box(bounds) -> Polytope:
    corners = list(product(*bounds))
    if len(bounds) == 2:
        return build_polygon(corners)
    facets = []
    for k in range(len(bounds)):
        for side in (0, 1):
            facets.append([i for i, c in enumerate(corners) if c[k] == bounds[k][side]])
    return build_polytope(corners, facets)


def parallelepiped_report(P: Polytope, checks: int = 3, seed: int = 0) -> ConvexityReport:
    """Box verdict; an asymmetric box is sliced down to a planar non-convex face.

    Each slice step is re-verified on ``checks`` random directions through the
    prism identity before it is put into the certificate.
    """
    bounds = box_bounds(P)
    sym = all(lo == -hi for lo, hi in bounds)
    pos = origin_position(P)
    if sym:
        return ConvexityReport("Convex", "Busemann", sym, pos)
    i = next(k for k, (lo, hi) in enumerate(bounds) if lo != -hi)
    rng = random.Random(seed)
    chain = []
    cur = list(range(P.dim))
    cur_bounds = list(bounds)
    while len(cur) > 2:
        j = next(k for k in reversed(cur) if k != i)
        pos_j = cur.index(j)
        base = tuple(cur_bounds[:pos_j] + cur_bounds[pos_j + 1:])
        lo, hi = cur_bounds[pos_j]
        K, L = _box(cur_bounds), _box(base)
        for _ in range(checks):
            u = _random_direction(rng, len(base))
            v = u[:pos_j] + (Fraction(0),) + u[pos_j:]
            if radial_value(K, v) != (hi - lo) * radial_value(L, u):
                raise AssertionError("prism identity failed on a box slice")
        chain.append(SliceStep(j, hi - lo, base))
        cur.pop(pos_j)
        cur_bounds = list(base)
    base_report = convexity_report_2d(_box(cur_bounds))
    if base_report.convex:
        raise AssertionError("planar base of an asymmetric box reported convex")
    return ConvexityReport("NonConvex", "SliceChain", sym, pos, slice_chain=tuple(chain),
                           asymmetric_axis=i, base_report=base_report)


# -- origin positions on edges ---------------------------------------------------------------

def admissible_edge_positions(P: Polytope) -> list[tuple[int, Vec]]:
    """Edges whose midpoint, used as origin, makes ``P ∪ -P`` convex.

    The two interior angles at the edge's endpoints must sum to at most pi.
    With counterclockwise vertices that is ``cross(A' - A, B' - B) >= 0`` for
    edge AB with outer neighbours A' and B'.
    """
    if P.dim != 2:
        raise ValueError("admissible_edge_positions needs a polygon")
    n = P.n_vertices
    V = P.vertices
    out = []
    for k, (i, j) in enumerate(P.edges):
        a, b = V[i], V[j]
        a_prev, b_next = V[(i - 1) % n], V[(j + 1) % n]
        if la.cross2(la.sub(a_prev, a), la.sub(b_next, b)) >= 0:
            out.append((k, la.scale(Fraction(1, 2), la.add(a, b))))
    return out


# -- sampled probe ---------------------------------------------------------------------------

def _random_direction(rng: random.Random, d: int, spread: int = 1000) -> Vec:
    while True:
        u = tuple(Fraction(rng.randint(-spread, spread)) for _ in range(d))
        if not la.is_zero(u):
            return u


def midpoint_convexity_probe(P: Polytope, pairs: int, seed: int = 0) -> ProbeResult:
    """Smallest sampled ``rho(x+y) - rho(x) rho(y) / (rho(x) + rho(y))``.

    Margins are exact until the final float conversion, so a negative value
    is a genuine certificate of non-convexity.
    """
    rng = random.Random(seed)
    todo = []
    while len(todo) < pairs:
        x, y = _random_direction(rng, P.dim), _random_direction(rng, P.dim)
        if not la.is_zero(la.add(x, y)):
            todo.append((x, y))
    best = None
    violator = None
    for x, y in todo:
        rx, ry = radial_value(P, x), radial_value(P, y)
        inner = rx * ry / (rx + ry) if rx + ry else Fraction(0)
        margin = radial_value(P, la.add(x, y)) - inner
        if best is None or margin < best:
            best = margin
            if margin < 0:
                violator = (x, y)
    return ProbeResult(float(best), violator, pairs)
