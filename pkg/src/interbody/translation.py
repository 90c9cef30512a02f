"""Affine arrangement of translation vectors and polynomiality in ``t``.

The arrangement ``L(P)`` consists of the affine hyperplanes spanned by ``d``
affinely independent negated vertices. Inside one of its regions the chamber
sign vectors of ``P + t`` do not change, and on a fixed chamber the radial
function is a polynomial in ``t`` of degree at most ``d - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from . import linalg as la
from .arrangement import SignVector, cocircuit_of, enumerate_chambers
from .exceptions import ChamberMismatch, DegreeExceeded, OnHyperplane, OnWall
from .linalg import Vec
from .polynomial import MPoly, t_names
from .polytope import Polytope, translate
from .radial import radial_value


@dataclass(frozen=True)
class AffineHyperplane:
    """``{t : <normal, t> = offset}`` through the negated generator vertices."""
    normal: Vec
    offset: Fraction
    generators: tuple[int, ...]

    def side(self, t: Sequence) -> int:
        return la.sign(la.dot(self.normal, t) - self.offset)

    def key(self) -> tuple:
        return self.normal + (self.offset,)


@dataclass(frozen=True)
class Region:
    signs: tuple[int, ...]
    witness_t: Vec

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


def _canonical(normal: Vec, offset: Fraction) -> tuple[Vec, Fraction]:
    full = la.primitive(normal + (offset,))
    lead = next(c for c in full if c != 0)
    if lead < 0:
        full = la.neg(full)
    return full[:-1], full[-1]


def affine_arrangement(P: Polytope) -> list[AffineHyperplane]:
    """Deduplicated hyperplanes ``aff(-v_1, ..., -v_d)``, in first-seen order."""
    d = P.dim
    negs = [la.neg(v) for v in P.vertices]
    seen = {}
    for idx in combinations(range(len(negs)), d):
        pts = [negs[i] for i in idx]
        diffs = [la.sub(p, pts[0]) for p in pts[1:]]
        ns = la.nullspace(diffs, d) if diffs else []
        if len(ns) != 1:
            continue
        normal, off = _canonical(ns[0], la.dot(ns[0], pts[0]))
        seen.setdefault((normal, off), idx)
    return [AffineHyperplane(n, o, g) for (n, o), g in seen.items()]


def region_of(L: Sequence[AffineHyperplane], t: Sequence) -> Region:
    t = la.vec(t)
    signs = []
    for k, h in enumerate(L):
        s = h.side(t)
        if s == 0:
            raise OnHyperplane(k)
        signs.append(s)
    return Region(tuple(signs), t)


def cocircuit_set(P: Polytope) -> frozenset[str]:
    return frozenset(str(C.cocircuit) for C in enumerate_chambers(P))


def verify_cocircuit_stability(P: Polytope, t1: Sequence, t2: Sequence) -> bool:
    """Compare the chamber sign-vector sets of ``P + t1`` and ``P + t2``.

    Both translations must avoid ``L(P)``. A False return falsifies the
    stability statement for two points of one region.
    """
    L = affine_arrangement(P)
    region_of(L, t1)
    region_of(L, t2)
    return cocircuit_set(translate(P, t1)) == cocircuit_set(translate(P, t2))


# -- sampling inside a region ----------------------------------------------------

def _region_constraints(L, region: Region):
    rows = [la.scale(s, h.normal) for h, s in zip(L, region.signs)]
    rhs = [s * h.offset for h, s in zip(L, region.signs)]
    return rows, rhs


def random_point_in_region(L, region: Region, rng: random.Random, steps: int = 3) -> Vec:
    """Rational hit-and-run walk from the region witness; stays strictly inside."""
    rows, rhs = _region_constraints(L, region)
    t = region.witness_t
    d = len(t)
    for _ in range(steps):
        u = tuple(Fraction(rng.randint(-20, 20)) for _ in range(d))
        if la.is_zero(u):
            continue
        lam_max = Fraction(4)
        lam_min = Fraction(-4)
        for a, c in zip(rows, rhs):
            slack = la.dot(a, t) - c
            rate = la.dot(a, u)
            if rate < 0:
                lam_max = min(lam_max, slack / -rate)
            elif rate > 0:
                lam_min = max(lam_min, -slack / rate)
        frac = Fraction(rng.randint(1, 999), 1000)
        t = la.add(t, la.scale(lam_min + frac * (lam_max - lam_min), u))
    return t


def random_regions(P: Polytope, count: int, rng: random.Random, box: int = 3) -> list[Region]:
    """Distinct regions of L(P) hit by random rational translations in a box."""
    L = affine_arrangement(P)
    found = {}
    attempts = 0
    while len(found) < count and attempts < 200 * count:
        attempts += 1
        t = tuple(Fraction(rng.randint(-box * 97, box * 97), 97) for _ in range(P.dim))
        try:
            r = region_of(L, t)
        except OnHyperplane:
            continue
        found.setdefault(r.signs, r)
    return list(found.values())


# -- polynomial in t -----------------------------------------------------------------

def _monomials(d: int, deg: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(deg + 1):
        for combo in combinations_with_replacement(range(d), k):
            e = [0] * d
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _valid_box(P: Polytope, L, region: Region, s: SignVector, x: Vec):
    """Center and half-width of a cube of translations keeping (region, chamber) fixed.

    Both conditions are strict linear inequalities in t, so a point found by
    exact feasibility plus a slack-limited half-width certifies the whole cube.
    """
    rows, rhs = _region_constraints(L, region)
    for i, v in enumerate(P.vertices):
        if i not in s:
            continue
        # s_i * (<x, v> + <x, t>) > 0
        rows.append(la.scale(s[i], x))
        rhs.append(-s[i] * la.dot(x, v))
    center = region.witness_t
    if not all(la.dot(a, center) > c for a, c in zip(rows, rhs)):
        center = la.strict_affine_point(rows, rhs)
        if center is None:
            raise ChamberMismatch("no translation in the region keeps x in this chamber")
    h = Fraction(1)
    for a, c in zip(rows, rhs):
        slack = la.dot(a, center) - c
        spread = sum(abs(ai) for ai in a)
        if spread:
            h = min(h, slack / (2 * spread))
    return center, h


def radial_polynomial_in_t(P: Polytope, region: Region, s: SignVector, x: Sequence,
                           held_out: int = 5, seed: int = 0) -> MPoly:
    """Exact interpolant of ``t -> rho_{I(P+t)}(x)`` over a region and chamber.

    Fits on a tensor grid of side ``d`` with the degree ``<= d - 1`` basis and
    demands an exact fit on the grid plus ``held_out`` extra samples.
    """
    x = la.vec(x)
    d = P.dim
    L = affine_arrangement(P)
    center, h = _valid_box(P, L, region, s, x)

    def sample(t):
        try:
            if cocircuit_of(translate(P, t), x) != s:
                raise ChamberMismatch(f"x leaves chamber {s} at t={t}")
            region_of(L, t)
        except (OnWall, OnHyperplane) as exc:
            raise ChamberMismatch(str(exc)) from exc
        return radial_value(translate(P, t), x)

    offsets = [Fraction(2 * j - (d - 1), max(d - 1, 1)) * h for j in range(d)]
    grid = [la.add(center, off) for off in product(offsets, repeat=d)]
    basis = _monomials(d, d - 1)
    rows = [[_mono(e, t) for e in basis] for t in grid]
    vals = [sample(t) for t in grid]
    coeffs = la.solve_consistent(rows, vals)
    if coeffs is None:
        raise DegreeExceeded("grid values are not a polynomial of degree <= d-1")
    poly = MPoly(t_names(d), dict(zip(basis, coeffs)))
    rng = random.Random(seed)
    for _ in range(held_out):
        t = la.add(center, tuple(Fraction(rng.randint(-999, 999), 1000) * h for _ in range(d)))
        if poly(t) != sample(t):
            raise DegreeExceeded(f"held-out sample at t={t} disagrees")
    return poly


def _mono(e, t) -> Fraction:
    out = Fraction(1)
    for ti, k in zip(t, e):
        if k:
            out *= ti ** k
    return out
