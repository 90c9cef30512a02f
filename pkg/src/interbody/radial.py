"""Radial function of the intersection body of a polytope.

``rho(x) = vol_{d-1}(P ∩ x⊥) / |x|``. Exact evaluation goes through the
cone-over-boundary determinant sum, which only ever needs ``|x|^2``: each
boundary simplex of the section, coned to the origin, contributes
``det[v_1; ...; v_{d-1}; x]`` and the total is divided by ``(d-1)! |x|^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from . import linalg as la
from .arrangement import Chamber
from .exceptions import DivisibilityFailure, EmptySection, ZeroDirection
from .linalg import Vec
from .polynomial import MPoly, x_names
from .polytope import Polytope, cross_section, order_section, section_points


@dataclass(frozen=True)
class SectionSimplex:
    """A boundary simplex of the section, as the crossed edges its vertices sit on."""
    edges: tuple[int, ...]            # indices into P.edges
    edge_list: tuple[tuple[Vec, Vec], ...]
    sign: int


@dataclass(frozen=True)
class RadialPiece:
    """Radial function on one chamber: ``rho = p / (|x|^2 q)``.

    ``numerator / denominator`` is the same function after cancelling the
    common linear factors; ``boundary`` is ``denominator - numerator``
    normalized to coprime integer coefficients and negative near the origin
    inside the chamber.
    """
    chamber: Chamber
    p: MPoly
    q: MPoly
    numerator: MPoly
    denominator: MPoly
    boundary: MPoly

    def __call__(self, x: Sequence) -> Fraction:
        x = la.vec(x)
        return self.p(x) / (la.norm2(x) * self.q(x))


def _check_direction(x) -> Vec:
    x = la.vec(x)
    if la.is_zero(x):
        raise ZeroDirection("direction must be nonzero")
    return x


def radial_value(P: Polytope, x: Sequence) -> Fraction:
    """Exact ``rho_{IP}(x)``; zero when the section is empty or lower dimensional."""
    x = _check_direction(x)
    if len(x) != P.dim:
        raise ValueError("direction dimension mismatch")
    pts = [p for p, _ in section_points(P, x)]
    n2 = la.norm2(x)
    if P.dim == 2:
        if len(pts) < 2:
            return Fraction(0)
        r = la.rot90(x)
        ts = [la.dot(p, r) for p in pts]
        lo, hi = pts[ts.index(min(ts))], pts[ts.index(max(ts))]
        return abs(la.det([la.sub(lo, hi), x])) / n2
    if P.dim == 3:
        ring = order_section(pts, x)
        if len(ring) < 3:
            return Fraction(0)
        total = sum((la.det([ring[i], ring[(i + 1) % len(ring)], x]) for i in range(len(ring))), Fraction(0))
        return abs(total) / (2 * n2)
    raise NotImplementedError("radial_value is implemented for d = 2, 3")


def radial_oracle(P: Polytope, x: Sequence) -> float:
    """Floating-point rho from an orthonormal frame of x⊥ and the shoelace formula.

    Shares only :func:`cross_section` with the exact path.
    """
    x = _check_direction(x)
    pts = np.array([[float(c) for c in p] for p in cross_section(P, x)])
    xf = np.array([float(c) for c in x])
    xn = np.linalg.norm(xf)
    if P.dim == 2:
        if len(pts) < 2:
            return 0.0
        diff = pts[:, None, :] - pts[None, :, :]
        return float(np.sqrt((diff ** 2).sum(-1)).max() / xn)
    # columns 1.. of a complete QR of x span x⊥
    q, _ = np.linalg.qr(xf.reshape(-1, 1), mode="complete")
    frame = q[:, 1:]
    uv = pts @ frame
    if len(uv) < 3:
        return 0.0
    c = uv.mean(axis=0)
    ang = np.arctan2(uv[:, 1] - c[1], uv[:, 0] - c[0])
    uv = uv[np.argsort(ang)]
    xs, ys = uv[:, 0], uv[:, 1]
    area = 0.5 * abs(np.dot(xs, np.roll(ys, -1)) - np.dot(ys, np.roll(xs, -1)))
    return float(area / xn)


# -- chamber pieces ------------------------------------------------------------

def triangulate_section(P: Polytope, C: Chamber) -> list[SectionSimplex]:
    """Boundary simplices of the section over chamber C, signed so they sum to +volume.

    In the plane these are the two chord endpoints with opposite signs; in
    space, consecutive section vertices around the polygon. Simplices through
    an origin vertex contribute nothing and are left out.
    """
    w = C.witness
    pts = section_points(P, w)
    if not any(src[0] == "edge" for _, src in pts):
        raise EmptySection("chamber has no crossed edges")
    ring = order_section(pts, w, key=lambda it: it[0])

    def pair(src):
        return P.edge_vectors(src[1])

    out = []
    if P.dim == 2:
        if len(ring) < 2:
            raise EmptySection("section is a single point")
        (p0, s0), (p1, s1) = ring[0], ring[-1]
        sg = la.sign(la.det([la.sub(p0, p1), w]))
        for src, s in ((s0, sg), (s1, -sg)):
            if src[0] == "edge":
                out.append(SectionSimplex((src[1],), (pair(src),), s))
        return out
    if P.dim != 3:
        raise NotImplementedError("chamber pieces are implemented for d = 2, 3")
    if len(ring) < 3:
        raise EmptySection("section is lower dimensional")
    n = len(ring)
    for i in range(n):
        (_, a), (_, b) = ring[i], ring[(i + 1) % n]
        if a[0] == "edge" and b[0] == "edge":
            out.append(SectionSimplex((a[1], b[1]), (pair(a), pair(b)), 1))
    return out


def _poly_det(rows: list[list[MPoly]]) -> MPoly:
    n = len(rows)
    total = None
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        term = -term if inv % 2 else term
        total = term if total is None else total + term
    return total


def chamber_radial_piece(P: Polytope, C: Chamber) -> RadialPiece:
    d = P.dim
    names = x_names(d)
    w = C.witness
    simplices = triangulate_section(P, C)
    used = sorted({e for s in simplices for e in s.edges})
    lin, num = {}, {}
    for e in used:
        a, b = P.edge_vectors(e)
        l = MPoly.linear(names, la.sub(b, a))
        # orient each denominator to be positive on the chamber
        sg = la.sign(l(w))
        lin[e] = l * sg
        num[e] = [MPoly.linear(names, [sg * (b[j] * a[k] - a[j] * b[k]) for j in range(d)]) for k in range(d)]
    xrow = [MPoly.var(names, k) for k in range(d)]

    p_total = MPoly(names)
    for s in simplices:
        term = _poly_det([num[e] for e in s.edges] + [xrow]) * s.sign
        for e in used:
            if e not in s.edges:
                term = term * lin[e]
        p_total = p_total + term
    p = p_total * Fraction(1, math.factorial(d - 1))
    q = MPoly.const(names, 1)
    for e in used:
        q = q * lin[e]

    reduced, rem = p.divmod(MPoly.norm_squared(names))
    if rem:
        raise DivisibilityFailure(f"remainder {rem} for chamber {C.cocircuit}")
    factors = [lin[e] for e in used]
    keep = []
    for f in factors:
        ex = reduced.exact_div(f)
        if ex is not None:
            reduced = ex
        else:
            keep.append(f)
    den = MPoly.const(names, 1)
    for f in keep:
        den = den * f

    boundary = (den - reduced).primitive_part()
    low = min(sum(e) for e in boundary.terms)
    if boundary.homogeneous_part(low)(w) > 0:
        boundary = -boundary
    return RadialPiece(C, p, q, reduced, den, boundary)
