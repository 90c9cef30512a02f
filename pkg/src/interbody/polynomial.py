"""Sparse multivariate polynomials with exact rational coefficients.

Terms live in a dict mapping exponent tuples to nonzero Fractions. Monomial
order is graded lexicographic, which is all the division routines need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .linalg import rat


def _grlex(exp):
    return (sum(exp), exp)


class MPoly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.names = tuple(names)
        clean = {}
        for e, c in (terms or {}).items():
            c = rat(c)
            if c != 0:
                e = tuple(e)
                if len(e) != len(self.names):
                    raise ValueError("exponent length does not match variable count")
                clean[e] = c
        self.terms = clean

    # -- constructors
    @classmethod
    def const(cls, names, c) -> MPoly:
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names, i: int) -> MPoly:
        e = [0] * len(names)
        e[i] = 1
        return cls(names, {tuple(e): 1})

    @classmethod
    def linear(cls, names, coeffs: Sequence, constant=0) -> MPoly:
        """``sum(coeffs[i] * x_i) + constant``."""
        n = len(names)
        terms = {(0,) * n: constant}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(names, terms)

    @classmethod
    def norm_squared(cls, names) -> MPoly:
        n = len(names)
        return cls(names, {tuple(2 * (i == j) for j in range(n)): 1 for i in range(n)})

    # -- basic protocol
    @property
    def nvars(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.names, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("polynomials live in different rings")
            return other
        return MPoly.const(self.names, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = rat(other)
            return MPoly(self.names, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.names, 1)
        for _ in range(k):
            out = out * self
        return out

    # -- inspection
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, k: int) -> MPoly:
        return MPoly(self.names, {e: c for e, c in self.terms.items() if sum(e) == k})

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def leading(self) -> tuple[tuple, Fraction]:
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def __call__(self, point: Sequence) -> Fraction:
        pt = [rat(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for p, k in zip(pt, e):
                if k:
                    m *= p ** k
            total += m
        return total

    def evalf(self, point: Sequence[float]) -> float:
        total = 0.0
        for e, c in self.terms.items():
            m = float(c)
            for p, k in zip(point, e):
                if k:
                    m *= p ** k
            total += m
        return total

    # -- division
    def divmod(self, g: MPoly) -> tuple[MPoly, MPoly]:
        """Multivariate division by a single polynomial (grlex).

        With one divisor the remainder is zero exactly when ``g`` divides
        ``self``, since ``{g}`` is a Groebner basis of its own ideal.
        """
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ge, gc = g.leading()
        p = dict(self.terms)
        quot: dict = {}
        rem: dict = {}
        while p:
            e = max(p, key=_grlex)
            c = p[e]
            if all(a >= b for a, b in zip(e, ge)):
                qe = tuple(a - b for a, b in zip(e, ge))
                qc = c / gc
                quot[qe] = quot.get(qe, 0) + qc
                for e2, c2 in g.terms.items():
                    k = tuple(a + b for a, b in zip(qe, e2))
                    v = p.get(k, 0) - qc * c2
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
            else:
                rem[e] = c
                del p[e]
        return MPoly(self.names, quot), MPoly(self.names, rem)

    def exact_div(self, g: MPoly) -> MPoly | None:
        q, r = self.divmod(g)
        return None if r else q

    # -- normalisation and serialisation
    def normalized(self) -> MPoly:
        """Integer coefficients with content 1 and positive grlex leading coefficient."""
        if not self.terms:
            return self
        p = self.primitive_part()
        return -p if p.leading()[1] < 0 else p

    def primitive_part(self) -> MPoly:
        """Positive rescaling to coprime integer coefficients."""
        if not self.terms:
            return self
        den = lcm(*(c.denominator for c in self.terms.values()))
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        return self * Fraction(den, g)

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)]

    @classmethod
    def from_json(cls, names, data: Iterable[Mapping]) -> MPoly:
        return cls(names, {tuple(t["exp"]): Fraction(t["coef"]) for t in data})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MPoly({str(self)!r}, vars={self.names})"


def x_names(d: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(d))


def t_names(d: int) -> tuple[str, ...]:
    return tuple(f"t{i + 1}" for i in range(d))
