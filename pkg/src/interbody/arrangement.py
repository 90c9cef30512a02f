"""Central hyperplane arrangement of a polytope and its chambers.

Every nonzero vertex ``v`` contributes the hyperplane ``v⊥``. Chambers are
labelled by sign vectors indexed by vertex (not by distinct hyperplane), so
antipodal or parallel vertices keep separate entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from . import linalg as la
from .exceptions import OnWall
from .linalg import Vec
from .polytope import Polytope


@dataclass(frozen=True)
class CentralHyperplane:
    vertex_index: int
    normal: Vec


@dataclass(frozen=True)
class SignVector:
    """Map from (nonzero) vertex index to +1/-1."""
    signs: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict) -> SignVector:
        return cls(tuple(sorted((int(k), int(v)) for k, v in d.items())))

    def __getitem__(self, i: int) -> int:
        for k, s in self.signs:
            if k == i:
                return s
        raise KeyError(i)

    def __contains__(self, i) -> bool:
        return any(k == i for k, _ in self.signs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.signs)

    def negated(self) -> SignVector:
        return SignVector(tuple((k, -s) for k, s in self.signs))

    def __str__(self):
        return "".join("+" if s > 0 else "-" for _, s in self.signs)


@dataclass(frozen=True)
class Chamber:
    cocircuit: SignVector
    witness: Vec
    crossed_edges: tuple[tuple[int, int], ...]
    rays: tuple[Vec, Vec] | None = None  # bounding rays, d = 2 only (cw side, ccw side)


def central_arrangement(P: Polytope) -> list[CentralHyperplane]:
    return [CentralHyperplane(i, v) for i, v in enumerate(P.vertices) if not la.is_zero(v)]


def cocircuit_of(P: Polytope, x: Sequence) -> SignVector:
    x = la.vec(x)
    signs = []
    for i, v in enumerate(P.vertices):
        if la.is_zero(v):
            continue
        s = la.sign(la.dot(x, v))
        if s == 0:
            raise OnWall(i)
        signs.append((i, s))
    return SignVector(tuple(signs))


def crossed_edges(P: Polytope, s: SignVector) -> list[tuple[int, int]]:
    """Edges whose endpoints get opposite signs; edges at an origin vertex never count."""
    out = []
    for i, j in P.edges:
        if i in s and j in s and s[i] != s[j]:
            out.append((i, j))
    return out


def _chamber(P: Polytope, witness: Vec, rays=None) -> Chamber:
    s = cocircuit_of(P, witness)
    return Chamber(s, witness, tuple(crossed_edges(P, s)), rays)


def _angle_cmp(u: Vec, v: Vec) -> int:
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    c = la.cross2(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _chambers_2d(P: Polytope) -> list[Chamber]:
    rays = []
    for h in central_arrangement(P):
        r = la.primitive(la.rot90(h.normal))
        rays += [r, la.neg(r)]
    rays = sorted(set(rays), key=cmp_to_key(_angle_cmp))
    # merge rays pointing the same way (already primitive, so equality suffices)
    out = []
    n = len(rays)
    for k in range(n):
        r1, r2 = rays[k], rays[(k + 1) % n]
        if la.cross2(r1, r2) > 0:
            w = la.primitive(la.add(r1, r2))
        else:
            # half-plane sector (single line)
            w = la.primitive(la.rot90(r1))
        out.append(_chamber(P, w, (r1, r2)))
    return out


def _chambers_fm(P: Polytope) -> list[Chamber]:
    hyps = central_arrangement(P)
    found = []

    def dfs(k, rows):
        if k == len(hyps):
            w = la.strict_cone_point(rows)
            found.append(_chamber(P, w))
            return
        v = hyps[k].normal
        for s in (1, -1):
            cand = rows + [la.scale(s, v)]
            if la.strict_cone_point(cand) is not None:
                dfs(k + 1, cand)

    dfs(0, [])
    return found


def enumerate_chambers(P: Polytope) -> list[Chamber]:
    """All open chambers of the central arrangement, with witnesses.

    Angular sweep in the plane; for d >= 3 a depth-first search over sign
    vectors pruned by exact Fourier-Motzkin feasibility.
    """
    if P.dim == 2:
        return _chambers_2d(P)
    return _chambers_fm(P)


def chambers_by_feasibility(P: Polytope) -> list[Chamber]:
    """Feasibility-search enumeration in any dimension (independent of the sweep)."""
    return _chambers_fm(P)


def sector_point(chamber: Chamber, weight: Fraction) -> Vec:
    """Rational direction ``(1-w) r1 + w r2`` inside a planar chamber, 0 < w < 1.

    For half-plane sectors the point is taken on the rotated arc instead.
    """
    r1, r2 = chamber.rays
    if la.cross2(r1, r2) > 0:
        return la.add(la.scale(1 - weight, r1), la.scale(weight, r2))
    mid = la.rot90(r1)
    if weight <= Fraction(1, 2):
        return la.add(la.scale(1 - 2 * weight, r1), la.scale(2 * weight, mid))
    return la.add(la.scale(2 - 2 * weight, mid), la.scale(2 * weight - 1, r2))
