"""Exact rationals, polynomials and Bernstein-Bezier forms on the two standard polygons.

Polygons live in a fixed local plane:

* triangle slots 0, 1, 2 sit at (0,0), (1,0), (0,1); barycentric coordinates
  are (1-x-y, x, y);
* rectangle slots 0, 1, 2, 3 sit at (0,0), (1,0), (1,1), (0,1).

Local edge ``e`` runs from slot ``e`` to slot ``e+1`` (counterclockwise).
A *standard frame* at corner ``s`` pointing along the edge towards slot ``t``
is the affine chart (u, v) with u measured along s->t and v along s->o, where
o is the other neighbour of s.  All J^{1,1} jets and edge restrictions are
read in such frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]

TRIANGLE = "triangle"
RECTANGLE = "rectangle"
KINDS = (TRIANGLE, RECTANGLE)

POLY_VERTS = {
    TRIANGLE: ((0, 0), (1, 0), (0, 1)),
    RECTANGLE: ((0, 0), (1, 0), (1, 1), (0, 1)),
}


class DegreeOverflow(ValueError):
    """Polynomial does not fit the requested Bernstein-Bezier degree."""


class InvalidCorner(ValueError):
    """A corner or direction that is not a vertex/edge of the polygon."""


def rat(x: RatLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def fmt_rat(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies u**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: RatLike) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RatLike = 1) -> "UniPoly":
        return cls([0] * n + [c])

    @classmethod
    def lift(cls, x) -> "UniPoly":
        return x if isinstance(x, UniPoly) else cls([x])

    # basic queries
    def deg(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    # arithmetic
    def __add__(self, other) -> "UniPoly":
        o = UniPoly.lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-UniPoly.lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly.lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = rat(other)
            return UniPoly(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = fmt_rat(c)
            if i == 0:
                terms.append(s)
            else:
                mono = "u" if i == 1 else f"u^{i}"
                terms.append(mono if c == 1 else ("-" + mono if c == -1 else f"{s}*{mono}"))
        return " + ".join(terms).replace("+ -", "- ")

    def derive(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def integral(self) -> "UniPoly":
        """The antiderivative vanishing at 0, i.e. t -> int_0^t."""
        return UniPoly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def definite_integral(self, lo: RatLike = 0, hi: RatLike = 1) -> Fraction:
        F = self.integral()
        return F(hi) - F(lo)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> "UniPoly":
        """p(1 - u)."""
        return self.compose(UniPoly([1, -1]))

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        q = [Fraction(0)] * (dq + 1)
        lc = other.lead()
        for i in range(dq, -1, -1):
            f = r[i + len(other.coeffs) - 1] / lc
            q[i] = f
            if f:
                for j, b in enumerate(other.coeffs):
                    r[i + j] -= f * b
        return UniPoly(q), UniPoly(r[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        return self * (1 / self.lead()) if self.coeffs else self

    def content(self) -> Fraction:
        return rational_content(self.coeffs)


def rational_content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational gcd of the values (0 when all vanish)."""
    from math import gcd

    num, den = 0, 1
    for v in values:
        v = Fraction(v)
        if v == 0:
            continue
        num = gcd(num, v.numerator)
        den = den * v.denominator // gcd(den, v.denominator)
    return Fraction(num, den) if num else Fraction(0)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero if both vanish)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def U(*coeffs: RatLike) -> UniPoly:
    return UniPoly(coeffs)


X = UniPoly([0, 1])


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p: UniPoly):
    seq = [p, p.derive()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq, x: Fraction) -> int:
    signs = [s(x) for s in seq]
    signs = [v for v in signs if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(p: UniPoly, lo: RatLike = 0, hi: RatLike = 1) -> int:
    """Number of distinct real roots of p in the closed interval [lo, hi]."""
    lo, hi = rat(lo), rat(hi)
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.deg() == 0:
        return 0
    sq = p // poly_gcd(p, p.derive())
    seq = sturm_sequence(sq)
    n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    # Sturm counts roots in (lo, hi]
    return n + (1 if sq(lo) == 0 else 0)


def sign_on_interval(p: UniPoly, lo: RatLike = 0, hi: RatLike = 1) -> int:
    """+1 / -1 when p keeps a strict sign on [lo, hi]; 0 when it vanishes there."""
    if p.is_zero() or count_roots(p, lo, hi):
        return 0
    return 1 if p(rat(lo)) > 0 else -1


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Sparse polynomial in two variables; keys are exponent pairs (i, j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], RatLike] | None = None):
        self.coeffs: Dict[Tuple[int, int], Fraction] = {}
        for k, v in (coeffs or {}).items():
            v = rat(v)
            if v != 0:
                self.coeffs[(int(k[0]), int(k[1]))] = v

    @classmethod
    def const(cls, c: RatLike) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_uni(cls, p: UniPoly, var: int = 0) -> "BiPoly":
        return cls({((i, 0) if var == 0 else (0, i)): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def edge_form(cls, h0: UniPoly, h1: UniPoly) -> "BiPoly":
        """h0(u) + h1(u) v."""
        d = {(i, 0): c for i, c in enumerate(h0.coeffs)}
        for i, c in enumerate(h1.coeffs):
            d[(i, 1)] = c
        return cls(d)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=-1)

    def bidegree(self) -> Tuple[int, int]:
        return (max((i for i, _ in self.coeffs), default=-1),
                max((j for _, j in self.coeffs), default=-1))

    def __add__(self, other) -> "BiPoly":
        o = other if isinstance(other, BiPoly) else BiPoly.const(other)
        d = dict(self.coeffs)
        for k, v in o.coeffs.items():
            d[k] = d.get(k, 0) + v
        return BiPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "BiPoly":
        o = other if isinstance(other, BiPoly) else BiPoly.const(other)
        return self + (-o)

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            c = rat(other)
            return BiPoly({k: c * v for k, v in self.coeffs.items()})
        d: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), a in self.coeffs.items():
            for (p, q), b in other.coeffs.items():
                key = (i + p, j + q)
                d[key] = d.get(key, 0) + a * b
        return BiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "BiPoly(0)"
        items = sorted(self.coeffs.items())
        return "BiPoly(" + ", ".join(f"{fmt_rat(v)}*u^{i}v^{j}" for (i, j), v in items) + ")"

    def __call__(self, x: RatLike, y: RatLike) -> Fraction:
        x, y = rat(x), rat(y)
        return sum((v * x ** i * y ** j for (i, j), v in self.coeffs.items()), Fraction(0))

    def eval_float(self, x: float, y: float) -> float:
        return sum(float(v) * x ** i * y ** j for (i, j), v in self.coeffs.items())

    def derive(self, var: int) -> "BiPoly":
        d = {}
        for (i, j), v in self.coeffs.items():
            if var == 0 and i:
                d[(i - 1, j)] = v * i
            elif var == 1 and j:
                d[(i, j - 1)] = v * j
        return BiPoly(d)

    def v_part(self, j: int) -> UniPoly:
        """Coefficient of v**j as a polynomial in u."""
        n = max((i for i, jj in self.coeffs if jj == j), default=-1)
        return UniPoly(self.coeff(i, j) for i in range(n + 1))

    def substitute(self, X: Tuple[RatLike, RatLike, RatLike], Y: Tuple[RatLike, RatLike, RatLike]) -> "BiPoly":
        """Compose with the affine map x = X0 + X1 s + X2 t, y = Y0 + Y1 s + Y2 t."""
        lx = BiPoly({(0, 0): X[0], (1, 0): X[1], (0, 1): X[2]})
        ly = BiPoly({(0, 0): Y[0], (1, 0): Y[1], (0, 1): Y[2]})
        px = [BiPoly.const(1)]
        py = [BiPoly.const(1)]
        out = BiPoly()
        for (i, j), v in self.coeffs.items():
            while len(px) <= i:
                px.append(px[-1] * lx)
            while len(py) <= j:
                py.append(py[-1] * ly)
            out = out + px[i] * py[j] * v
        return out


def poly_arith(op: str, *args):
    """Small dispatcher over the polynomial operations used elsewhere."""
    if op == "add":
        out = args[0]
        for a in args[1:]:
            out = out + a
        return out
    if op == "mul":
        out = args[0]
        for a in args[1:]:
            out = out * a
        return out
    if op == "compose":
        return args[0].compose(args[1])
    if op == "derive":
        p = args[0]
        if isinstance(p, BiPoly):
            return p.derive(args[1] if len(args) > 1 else 0)
        return p.derive()
    if op == "definite_integral":
        return args[0].integral()
    raise ValueError(f"unknown polynomial operation {op!r}")


# ---------------------------------------------------------------------------
# polygon frames


def n_slots(kind: str) -> int:
    return len(POLY_VERTS[kind])


def other_neighbour(kind: str, s: int, t: int) -> int:
    n = n_slots(kind)
    nb = ((s + 1) % n, (s - 1) % n)
    if t not in nb:
        raise InvalidCorner(f"slots {s},{t} do not span an edge of a {kind}")
    return nb[1] if t == nb[0] else nb[0]


def frame_map(kind: str, s: int, t: int):
    """Affine map (u, v) -> (x, y) of the standard frame at slot s towards t."""
    o = other_neighbour(kind, s, t)
    P = POLY_VERTS[kind]
    ps, pt, po = P[s], P[t], P[o]
    X = (ps[0], pt[0] - ps[0], po[0] - ps[0])
    Y = (ps[1], pt[1] - ps[1], po[1] - ps[1])
    return X, Y


def frame_inverse(kind: str, s: int, t: int):
    """Affine map (x, y) -> (u, v) inverting :func:`frame_map`."""
    X, Y = frame_map(kind, s, t)
    a, b, c, d = Fraction(X[1]), Fraction(X[2]), Fraction(Y[1]), Fraction(Y[2])
    det = a * d - b * c
    ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
    # (u, v) = M^{-1} ((x, y) - p_s)
    U_ = (-(ia * X[0] + ib * Y[0]), ia, ib)
    V_ = (-(ic * X[0] + id_ * Y[0]), ic, id_)
    return U_, V_


def to_frame(p: BiPoly, kind: str, s: int, t: int) -> BiPoly:
    """Re-express a face polynomial in the standard frame at s towards t."""
    X, Y = frame_map(kind, s, t)
    return p.substitute(X, Y)


def from_frame(p: BiPoly, kind: str, s: int, t: int) -> BiPoly:
    U_, V_ = frame_inverse(kind, s, t)
    return p.substitute(U_, V_)


# ---------------------------------------------------------------------------
# Bernstein-Bezier forms


@dataclass(frozen=True)
class BBForm:
    """Control coefficients in the face's own layout.

    Rows are indexed by the power j of y (row 0 is local edge 0, i.e. v = 0),
    entries by the power i of x.  Triangle row j has k+1-j entries (the
    barycentric index of slot 0 is k-i-j); rectangle rows have k+1 entries.
    """

    kind: str
    degree: int
    coeffs: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        k = self.degree
        if self.kind not in KINDS or k < 0:
            raise ValueError(f"bad BB form header {self.kind!r}, {k}")
        if len(self.coeffs) != k + 1:
            raise ValueError("BB array has the wrong number of rows")
        for j, row in enumerate(self.coeffs):
            want = k + 1 - j if self.kind == TRIANGLE else k + 1
            if len(row) != want:
                raise ValueError(f"BB row {j} has {len(row)} entries, expected {want}")

    @classmethod
    def make(cls, kind: str, degree: int, rows: Sequence[Sequence[RatLike]]) -> "BBForm":
        return cls(kind, degree, tuple(tuple(rat(c) for c in r) for r in rows))

    @classmethod
    def zero(cls, kind: str, degree: int) -> "BBForm":
        k = degree
        n = (lambda j: k + 1 - j) if kind == TRIANGLE else (lambda j: k + 1)
        return cls(kind, k, tuple(tuple(Fraction(0) for _ in range(n(j))) for j in range(k + 1)))

    def get(self, i: int, j: int) -> Fraction:
        return self.coeffs[j][i]

    def items(self):
        for j, row in enumerate(self.coeffs):
            for i, c in enumerate(row):
                yield (i, j), c

    def flat(self) -> Tuple[Fraction, ...]:
        return tuple(c for row in self.coeffs for c in row)

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def __add__(self, other: "BBForm") -> "BBForm":
        self._same(other)
        return BBForm(self.kind, self.degree, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def scale(self, c: RatLike) -> "BBForm":
        c = rat(c)
        return BBForm(self.kind, self.degree, tuple(tuple(c * a for a in r) for r in self.coeffs))

    def _same(self, other):
        if (self.kind, self.degree) != (other.kind, other.degree):
            raise ValueError("BB forms of different shape")


def bb_index_count(kind: str, k: int) -> int:
    return (k + 1) * (k + 2) // 2 if kind == TRIANGLE else (k + 1) ** 2


def bb_indices(kind: str, k: int):
    """All (i, j) positions of a BB array, row-major."""
    for j in range(k + 1):
        for i in range(k + 1 - j if kind == TRIANGLE else k + 1):
            yield (i, j)


def _multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def bernstein_basis(kind: str, k: int, i: int, j: int) -> BiPoly:
    """The BB basis polynomial at position (i, j) in x, y coordinates."""
    if kind == TRIANGLE:
        l = k - i - j
        w = BiPoly({(0, 0): 1, (1, 0): -1, (0, 1): -1})
        return BiPoly({(i, j): _multinomial(k, (i, j, l))}) * (w ** l)
    bx = UniPoly.monomial(i, comb(k, i)) * (UniPoly([1, -1]) ** (k - i))
    by = UniPoly.monomial(j, comb(k, j)) * (UniPoly([1, -1]) ** (k - j))
    return BiPoly({(a, b): ca * cb for a, ca in enumerate(bx.coeffs) for b, cb in enumerate(by.coeffs)})


def fits_degree(p: BiPoly, kind: str, k: int) -> bool:
    if kind == TRIANGLE:
        return p.total_degree() <= k
    bx, by = p.bidegree()
    return bx <= k and by <= k


def to_bb(p: BiPoly, kind: str, k: int) -> BBForm:
    if not fits_degree(p, kind, k):
        raise DegreeOverflow(f"polynomial exceeds degree {k} on a {kind}")
    rows = []
    for j in range(k + 1):
        row = []
        for i in range(k + 1 - j if kind == TRIANGLE else k + 1):
            acc = Fraction(0)
            for (a, b), v in p.coeffs.items():
                if a > i or b > j:
                    continue
                if kind == TRIANGLE:
                    l = k - i - j
                    acc += v * Fraction(_multinomial(k - a - b, (i - a, j - b, l)),
                                        _multinomial(k, (i, j, l)))
                else:
                    acc += v * Fraction(comb(i, a) * comb(j, b), comb(k, a) * comb(k, b))
            row.append(acc)
        rows.append(tuple(row))
    return BBForm(kind, k, tuple(rows))


def from_bb(b: BBForm) -> BiPoly:
    out = BiPoly()
    for (i, j), c in b.items():
        if c:
            out = out + bernstein_basis(b.kind, b.degree, i, j) * c
    return out


def elevate(b: BBForm) -> BBForm:
    """Re-express a BB form at degree k+1 (rectangles: bidegree (k+1, k+1))."""
    k = b.degree
    K = k + 1
    if b.kind == TRIANGLE:
        def g(i, j):
            if i < 0 or j < 0 or i + j > k:
                return Fraction(0)
            return b.coeffs[j][i]
        rows = []
        for j in range(K + 1):
            row = []
            for i in range(K + 1 - j):
                l = K - i - j
                row.append((i * g(i - 1, j) + j * g(i, j - 1) + l * g(i, j)) / K)
            rows.append(tuple(row))
        return BBForm(b.kind, K, tuple(rows))

    def g(i, j):
        if 0 <= i <= k and 0 <= j <= k:
            return b.coeffs[j][i]
        return Fraction(0)
    rows = []
    for j in range(K + 1):
        row = []
        for i in range(K + 1):
            fx = lambda jj: (i * g(i - 1, jj) + (K - i) * g(i, jj)) / K
            row.append((j * fx(j - 1) + (K - j) * fx(j)) / K)
        rows.append(tuple(row))
    return BBForm(b.kind, K, tuple(rows))


def elevate_to(b: BBForm, k: int) -> BBForm:
    if k < b.degree:
        raise DegreeOverflow("cannot lower the degree by elevation")
    while b.degree < k:
        b = elevate(b)
    return b


def frame_position(kind: str, k: int, s: int, t: int, p: int, q: int) -> Tuple[int, int]:
    """Array position reached by p steps from corner s towards t and q towards o."""
    o = other_neighbour(kind, s, t)
    if kind == TRIANGLE:
        if p < 0 or q < 0 or p + q > k:
            raise InvalidCorner("position outside the triangle")
        bary = [0, 0, 0]
        bary[s] = k - p - q
        bary[t] += p
        bary[o] += q
        return bary[1], bary[2]
    P = POLY_VERTS[kind]
    i = k * P[s][0] + p * (P[t][0] - P[s][0]) + q * (P[o][0] - P[s][0])
    j = k * P[s][1] + p * (P[t][1] - P[s][1]) + q * (P[o][1] - P[s][1])
    if not (0 <= i <= k and 0 <= j <= k):
        raise InvalidCorner("position outside the rectangle")
    return i, j


def default_toward(kind: str, s: int) -> int:
    return (s + 1) % n_slots(kind)


@dataclass(frozen=True)
class Jet11:
    """Coefficients of 1, u, v, uv in a standard frame at a corner."""

    c00: Fraction
    c10: Fraction
    c01: Fraction
    c11: Fraction

    @classmethod
    def make(cls, *vals: RatLike) -> "Jet11":
        return cls(*(rat(v) for v in vals))

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c00, self.c10, self.c01, self.c11)

    def swapped(self) -> "Jet11":
        """The same jet read in the other standard frame at the corner."""
        return Jet11(self.c00, self.c01, self.c10, self.c11)

    def is_zero(self) -> bool:
        return not any(self.as_tuple())


def jet_of_poly(p: BiPoly) -> Jet11:
    """J^{1,1} jet at the origin of a polynomial already in frame coordinates."""
    return Jet11(p.coeff(0, 0), p.coeff(1, 0), p.coeff(0, 1), p.coeff(1, 1))


def corner_jet11(b: BBForm, corner: int, toward: int | None = None) -> Jet11:
    """J^{1,1} jet at a corner read off the four corner control coefficients."""
    n = n_slots(b.kind)
    if not 0 <= corner < n:
        raise InvalidCorner(f"{b.kind} has no corner {corner}")
    t = default_toward(b.kind, corner) if toward is None else toward
    k = b.degree
    if k == 0:
        return Jet11(b.coeffs[0][0], Fraction(0), Fraction(0), Fraction(0))
    pos = lambda p, q: frame_position(b.kind, k, corner, t, p, q)
    c0, c1, c2 = (b.get(*pos(0, 0)), b.get(*pos(1, 0)), b.get(*pos(0, 1)))
    mixed = k * (k - 1) if b.kind == TRIANGLE else k * k
    if mixed == 0:
        # a linear triangle has no uv term and no (1, 1) control point
        return Jet11(c0, k * (c1 - c0), k * (c2 - c0), Fraction(0))
    c3 = b.get(*pos(1, 1))
    return Jet11(c0, k * (c1 - c0), k * (c2 - c0), mixed * (c3 - c2 - c1 + c0))
