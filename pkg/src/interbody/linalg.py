"""Exact rational vector and matrix helpers.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of them.
Nothing in here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vec = tuple  # tuple[Fraction, ...]


def rat(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


def vec(values: Iterable) -> Vec:
    return tuple(rat(v) for v in values)


def zero(d: int) -> Vec:
    return (Fraction(0),) * d


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(c, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def norm2(u: Vec) -> Fraction:
    return dot(u, u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def cross2(u: Vec, v: Vec) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def rot90(u: Vec) -> Vec:
    """Counterclockwise rotation by a quarter turn."""
    return (-u[1], u[0])


def primitive(u: Sequence) -> Vec:
    """Positive rescaling of ``u`` to coprime integers (as Fractions)."""
    u = [rat(a) for a in u]
    if all(a == 0 for a in u):
        return tuple(u)
    den = lcm(*(a.denominator for a in u))
    ints = [int(a * den) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[rat(a) for a in row] for row in rows]
    n = len(m)
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        a, b, c = m
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[rat(a) for a in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vec]:
    """Basis of {x : rows @ x = 0}."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def solve_consistent(rows: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """Exact solution of a (possibly overdetermined) system, or None.

    Free variables are set to zero. Returns None when inconsistent.
    """
    aug = [list(r) + [rat(b)] for r, b in zip(rows, rhs)]
    ncols = len(aug[0]) - 1
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][ncols]
    return tuple(x)


# -- strict homogeneous feasibility (Fourier-Motzkin) -----------------------

def _normalize_row(row: Vec) -> Vec:
    big = max(abs(a) for a in row)
    return tuple(a / big for a in row) if big else row


def strict_cone_point(rows: Sequence[Sequence]) -> Vec | None:
    """Find x with ``<a, x> > 0`` for every row ``a``, or None if infeasible.

    Fourier-Motzkin elimination followed by exact back-substitution; the
    returned point is a primitive integer vector.
    """
    rows = [vec(r) for r in rows]
    if not rows:
        return None
    n = len(rows[0])
    levels = []
    cur = list(dict.fromkeys(_normalize_row(r) for r in rows))
    for k in range(n):
        levels.append(cur)
        pos = [r for r in cur if r[k] > 0]
        negs = [r for r in cur if r[k] < 0]
        nxt = [r for r in cur if r[k] == 0]
        for p in pos:
            for q in negs:
                nxt.append(tuple(-q[k] * a + p[k] * b for a, b in zip(p, q)))
        cur = list(dict.fromkeys(_normalize_row(r) for r in nxt))
        if any(is_zero(r) for r in cur):
            return None
    # every variable eliminated; any surviving row would be "0 > 0"
    if cur:
        return None
    x = [Fraction(0)] * n
    for k in reversed(range(n)):
        lo = hi = None
        for r in levels[k]:
            rest = sum((r[j] * x[j] for j in range(k + 1, n)), Fraction(0))
            if r[k] > 0:
                b = -rest / r[k]
                lo = b if lo is None else max(lo, b)
            elif r[k] < 0:
                b = -rest / r[k]
                hi = b if hi is None else min(hi, b)
        if lo is not None and hi is not None:
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo + 1
        elif hi is not None:
            x[k] = hi - 1
        else:
            x[k] = Fraction(1)
    return primitive(x)


def strict_affine_point(rows: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """Find t with ``<a, t> > c`` for each (row a, c), or None."""
    homog = [tuple(vec(a)) + (-rat(c),) for a, c in zip(rows, rhs)]
    n = len(homog[0]) - 1
    homog.append(zero(n) + (Fraction(1),))
    x = strict_cone_point(homog)
    if x is None:
        return None
    return tuple(a / x[-1] for a in x[:-1])
