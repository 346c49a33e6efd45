"""Syzygy modules Z(a, b, c), mu-bases and twisted degrees.

The twisted grading puts a syzygy (A, B, C) in Z_k when
deg A <= k - 1 + r1, deg B <= k - 1 and deg C <= k - 1 + r2, where r_i = 1 for
a rectangle side.  These are exactly the syzygies of edge splines of degree k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactalg import UniPoly
from .gluing import EdgeGluing, NotCoprime
from .linalg import Echelon, nullspace


@dataclass(frozen=True)
class Syzygy:
    A: UniPoly
    B: UniPoly
    C: UniPoly

    @classmethod
    def make(cls, A, B, C) -> "Syzygy":
        lift = lambda p: p if isinstance(p, UniPoly) else UniPoly(p if isinstance(p, (list, tuple)) else [p])
        return cls(lift(A), lift(B), lift(C))

    def residual(self, g: EdgeGluing) -> UniPoly:
        return g.a * self.A + g.b * self.B + g.c * self.C

    def is_syzygy(self, g: EdgeGluing) -> bool:
        return self.residual(g).is_zero()

    def scale(self, p) -> "Syzygy":
        p = p if isinstance(p, UniPoly) else UniPoly([p])
        return Syzygy(self.A * p, self.B * p, self.C * p)

    def __add__(self, o: "Syzygy") -> "Syzygy":
        return Syzygy(self.A + o.A, self.B + o.B, self.C + o.C)

    def __sub__(self, o: "Syzygy") -> "Syzygy":
        return Syzygy(self.A - o.A, self.B - o.B, self.C - o.C)

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero() and self.C.is_zero()

    def twisted_degree(self, r1: int, r2: int) -> int:
        return max(self.A.deg() + 1 - r1, self.B.deg() + 1, self.C.deg() + 1 - r2, 0)

    def as_tuple(self):
        return self.A, self.B, self.C

    def __repr__(self):
        return f"({self.A!r}, {self.B!r}, {self.C!r})"


def _sizes(k: int, r1: int, r2: int) -> Tuple[int, int, int]:
    """Coefficient counts of (C, A, B) in Z_k."""
    return max(k + r2, 0), max(k + r1, 0), max(k, 0)


def _to_vec(z: Syzygy, k: int, r1: int, r2: int) -> dict:
    nC, nA, nB = _sizes(k, r1, r2)
    v = {}
    for i, c in enumerate(z.C.coeffs):
        if c:
            v[i] = c
    for i, c in enumerate(z.A.coeffs):
        if c:
            v[nC + i] = c
    for i, c in enumerate(z.B.coeffs):
        if c:
            v[nC + nA + i] = c
    return v


def _from_vec(x, k: int, r1: int, r2: int) -> Syzygy:
    nC, nA, nB = _sizes(k, r1, r2)
    get = (lambda i: x.get(i, Fraction(0))) if isinstance(x, dict) else (lambda i: x[i])
    return Syzygy(UniPoly(get(i) for i in range(nC, nC + nA)),
                  UniPoly(get(i) for i in range(nC + nA, nC + nA + nB)),
                  UniPoly(get(i) for i in range(nC)))


def syzygy_rows(g: EdgeGluing, k: int):
    """Coefficient equations of a A + b B + c C = 0 on Z_k (columns C, A, B)."""
    r1, r2 = g.r1, g.r2
    nC, nA, nB = _sizes(k, r1, r2)
    ncols = nC + nA + nB
    top = max(g.a.deg() + nA, g.b.deg() + nB, g.c.deg() + nC, 0)
    rows = [dict() for _ in range(top + 1)]
    for poly, off, n in ((g.c, 0, nC), (g.a, nC, nA), (g.b, nC + nA, nB)):
        for i in range(n):
            for p, c in enumerate(poly.coeffs):
                if c:
                    rows[i + p][off + i] = rows[i + p].get(off + i, 0) + c
    return [r for r in rows if r], ncols


def syzygy_basis(g: EdgeGluing, k: int) -> List[Syzygy]:
    """A basis of Z_k(a, b, c) by direct exact kernel computation."""
    if k < 0:
        return []
    rows, n = syzygy_rows(g, k)
    return [_from_vec(x, k, g.r1, g.r2) for x in nullspace(rows, n)]


def syzygy_kernel_dim(g: EdgeGluing, k: int) -> int:
    return len(syzygy_basis(g, k))


def _normalize(z: Syzygy) -> Syzygy:
    lead = next((c for c in z.B.coeffs if c), None)
    if lead is None:
        lead = next((c for c in z.A.coeffs if c), None)
    if lead is None:
        lead = next(c for c in z.C.coeffs if c)
    return z.scale(1 / lead)


@dataclass(frozen=True)
class MuBasis:
    Z1: Syzygy
    Z2: Syzygy
    d1: int
    d2: int
    r1: int
    r2: int

    def outer_product(self) -> Tuple[UniPoly, UniPoly, UniPoly]:
        A1, B1, C1 = self.Z1.as_tuple()
        A2, B2, C2 = self.Z2.as_tuple()
        return B1 * C2 - B2 * C1, C1 * A2 - C2 * A1, A1 * B2 - A2 * B1

    def h0(self, g: EdgeGluing) -> Optional[Fraction]:
        """The constant h0 with outer product = h0 (a, b, c), or None if none exists."""
        X = self.outer_product()
        t = (g.a, g.b, g.c)
        h = None
        for p, q in zip(X, t):
            if q.is_zero():
                if not p.is_zero():
                    return None
                continue
            quo, rem = p.divmod(q)
            if not rem.is_zero() or quo.deg() > 0:
                return None
            val = quo.coeff(0)
            if h is None:
                h = val
            elif h != val:
                return None
        return h

    def leading_terms(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        out = []
        for z, d in ((self.Z1, self.d1), (self.Z2, self.d2)):
            out.append((z.A.coeff(d - 1 + self.r1), z.B.coeff(d - 1), z.C.coeff(d - 1 + self.r2)))
        return tuple(out[0]), tuple(out[1])

    def leading_independent(self) -> bool:
        (a1, b1, c1), (a2, b2, c2) = self.leading_terms()
        return any(x != 0 for x in (b1 * c2 - b2 * c1, c1 * a2 - c2 * a1, a1 * b2 - a2 * b1))


def edge_delta(g: EdgeGluing) -> int:
    """max(r1 + deg a, deg b, r2 + deg c)."""
    terms = [g.r1 + g.a.deg()]
    if not g.b.is_zero():
        terms.append(g.b.deg())
    if not g.c.is_zero():
        terms.append(g.r2 + g.c.deg())
    return max(terms)


def _multiples(z: Syzygy, deg: int, k: int) -> List[Syzygy]:
    return [z.scale(UniPoly.monomial(j)) for j in range(k - deg + 1)]


def mu_basis(g: EdgeGluing) -> MuBasis:
    """Minimal generators of Z(a, b, c) by increasing twisted degree."""
    if not g.is_coprime():
        raise NotCoprime("gluing triple has a common polynomial factor")
    r1, r2 = g.r1, g.r2
    gens: List[Tuple[Syzygy, int]] = []
    k = 0
    limit = edge_delta(g) + 3
    while len(gens) < 2:
        if k > limit:
            raise RuntimeError("mu-basis search did not terminate")  # pragma: no cover
        span = Echelon()
        for z, d in gens:
            for m in _multiples(z, d, k):
                span.add(_to_vec(m, k, r1, r2))
        rows, n = syzygy_rows(g, k)
        new = []
        for x in nullspace(rows, n):
            r = span.reduce({i: v for i, v in enumerate(x) if v})
            if r:
                span.add(r)
                new.append(r)
        if new:
            # reduce the new vectors against each other and against the old span
            red = Echelon()
            for z, d in gens:
                for m in _multiples(z, d, k):
                    red.add(_to_vec(m, k, r1, r2))
            old = set(red.pivots)
            for r in new:
                red.add(r)
            full = red.reduced()
            fresh = [_normalize(_from_vec(full[p], k, r1, r2)) for p in sorted(full) if p not in old]
            fresh.sort(key=lambda z: (z.B.deg(), z.A.deg()))
            gens.extend((z, k) for z in fresh)
        k += 1
    (Z1, d1), (Z2, d2) = gens[0], gens[1]
    return MuBasis(Z1, Z2, d1, d2, r1, r2)


def syzygy_space_dim(m: MuBasis, k: int) -> int:
    if k < m.d1:
        return 0
    if k < m.d2:
        return k - m.d1 + 1
    return 2 * k - m.d1 - m.d2 + 2
