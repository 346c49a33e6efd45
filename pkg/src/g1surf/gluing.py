"""Rational G1 gluing data on interior edges and the well-formedness checks.

An edge gluing (a, b, c) in a frame (side 1, u = 0 at one endpoint) encodes

    a(u) dv1 = b(u) du + c(u) dv2,

that is beta = b/a and gamma = c/a.  A G1 spline (g1, g2) must then satisfy
a A + b B + c C = 0 along the edge with A = -dg1/dv1, B = dg/du, C = dg2/dv2.

Each interior edge of a surface stores its gluing once, in the canonical
frame: side 1 is the lower (face, local edge) pair of the identification and
u = 0 sits at the start slot of that polygon edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import PEdge, Surface, edge_slots
from .exactalg import RECTANGLE, UniPoly, count_roots, poly_gcd, rat

Mat = Tuple[Tuple[Fraction, ...], ...]


class GluingError(ValueError):
    pass


class NotCoprime(GluingError):
    pass


class MissingGluing(GluingError):
    pass


class NotInterior(GluingError):
    pass


class NotCrossing(GluingError):
    pass


def _primitive(polys: Sequence[UniPoly]) -> List[UniPoly]:
    """Scale a list of polynomials to coprime integer coefficients."""
    den = 1
    num = 0
    for p in polys:
        for c in p.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
    for p in polys:
        for c in p.coeffs:
            num = gcd(num, int(c * den))
    if num == 0:
        return list(polys)
    return [p * Fraction(den, num) for p in polys]


@dataclass(frozen=True)
class EdgeGluing:
    """Gluing triple in a declared frame; r1, r2 flag rectangle sides."""

    a: UniPoly
    b: UniPoly
    c: UniPoly
    r1: int = 0
    r2: int = 0

    @classmethod
    def make(cls, a, b, c, r1: int = 0, r2: int = 0) -> "EdgeGluing":
        lift = lambda p: p if isinstance(p, UniPoly) else UniPoly(p if isinstance(p, (list, tuple)) else [p])
        return cls(lift(a), lift(b), lift(c), int(r1), int(r2))

    def normalized(self) -> "EdgeGluing":
        """Primitive integer coefficients with a(0) > 0."""
        a, b, c = _primitive([self.a, self.b, self.c])
        if a(0) < 0 or (a(0) == 0 and a.lead() < 0):
            a, b, c = -a, -b, -c
        return EdgeGluing(a, b, c, self.r1, self.r2)

    def triple(self) -> Tuple[UniPoly, UniPoly, UniPoly]:
        return self.a, self.b, self.c

    def same_as(self, other: "EdgeGluing") -> bool:
        """Equality up to a common nonzero constant."""
        return (self.r1, self.r2) == (other.r1, other.r2) and \
            self.normalized().triple() == other.normalized().triple()

    # values of beta, gamma and their derivatives (quotient rule)
    def beta(self, u=0) -> Fraction:
        return self.b(u) / self.a(u)

    def gamma(self, u=0) -> Fraction:
        return self.c(u) / self.a(u)

    def beta_deriv(self, u=0) -> Fraction:
        a, b = self.a, self.b
        return (b.derive()(u) * a(u) - b(u) * a.derive()(u)) / a(u) ** 2

    def gamma_deriv(self, u=0) -> Fraction:
        a, c = self.a, self.c
        return (c.derive()(u) * a(u) - c(u) * a.derive()(u)) / a(u) ** 2

    @property
    def shears(self) -> Tuple[int, int]:
        """Shear of the end-point frame change: 1 on triangles, 0 on rectangles."""
        return 1 - self.r1, 1 - self.r2

    def is_coprime(self) -> bool:
        g = poly_gcd(poly_gcd(self.a, self.b), self.c)
        return g.deg() == 0

    def a_nonvanishing(self) -> bool:
        return not self.a.is_zero() and count_roots(self.a, 0, 1) == 0

    def gamma_negative(self) -> bool:
        if self.c.is_zero() or count_roots(self.c, 0, 1):
            return False
        return (self.c(0) > 0) != (self.a(0) > 0)

    def __repr__(self):
        return f"EdgeGluing(a={self.a!r}, b={self.b!r}, c={self.c!r}, r=({self.r1},{self.r2}))"


@dataclass(frozen=True)
class FrameChange:
    """Endpoint swap and/or side swap of an edge frame.

    ``shear`` overrides the shears (r_1, r_2) of the general adjustment
    (u, v) -> (1 - u - r v, q v); by default they follow the polygon kinds.
    """

    endpoint_swap: bool = False
    side_swap: bool = False
    shear: Optional[Tuple[int, int]] = None
    q: Tuple[object, object] = (1, 1)

    def then(self, other: "FrameChange") -> "FrameChange":
        """The change equivalent to applying self and then other (q = 1 only)."""
        if tuple(self.q) != (1, 1) or tuple(other.q) != (1, 1) or self.shear or other.shear:
            raise GluingError("composition is only defined for the standard frame changes")
        return FrameChange(self.endpoint_swap != other.endpoint_swap, self.side_swap != other.side_swap)


IDENTITY = FrameChange()
ENDPOINT_SWAP = FrameChange(endpoint_swap=True)
SIDE_SWAP = FrameChange(side_swap=True)


def change_frame(g: EdgeGluing, f: FrameChange) -> EdgeGluing:
    a, b, c, r1, r2 = g.a, g.b, g.c, g.r1, g.r2
    if f.endpoint_swap:
        s1, s2 = f.shear if f.shear is not None else g.shears
        q1, q2 = rat(f.q[0]), rat(f.q[1])
        if q1 <= 0 or q2 <= 0:
            raise GluingError("frame scales must be positive")
        flip = UniPoly([1, -1])
        a, b, c = (a * q1).compose(flip), (a * s1 - c * s2 - b).compose(flip), (c * q2).compose(flip)
    if f.side_swap:
        a, b, c, r1, r2 = c, -b, a, r2, r1
    return EdgeGluing(a, b, c, r1, r2).normalized()


def end_frame(g: EdgeGluing, end: int) -> EdgeGluing:
    """The gluing re-framed so that u = 0 sits at the given end (0 or 1)."""
    return g if end == 0 else change_frame(g, ENDPOINT_SWAP)


# ---------------------------------------------------------------------------
# gluing data attached to a surface


def side_flags(s: Surface, i: int) -> Tuple[int, int]:
    e = s.gluings[i]
    return int(s.kind(e.faceA) == RECTANGLE), int(s.kind(e.faceB) == RECTANGLE)


def canonical_from_declared(s: Surface, side1: PEdge, u0_slot: int, g: EdgeGluing) -> Tuple[int, EdgeGluing]:
    """Convert a gluing declared with side 1 = side1 and u = 0 at u0_slot."""
    i = s.edge_index(side1)
    e = s.gluings[i]
    A = (e.faceA, e.edgeA)
    if side1 != A and s.partner(side1)[0] != A:
        raise GluingError("declared side is not on the edge")
    if u0_slot not in edge_slots(s.kind(side1[0]), side1[1]):
        raise GluingError(f"slot {u0_slot} is not an endpoint of edge {side1}")
    r = (int(s.kind(side1[0]) == RECTANGLE), int(s.kind(s.partner(side1)[0][0]) == RECTANGLE))
    g = EdgeGluing(g.a, g.b, g.c, *r)
    # bring u = 0 to the canonical endpoint, expressed on the declared side
    a_start = edge_slots(s.kind(e.faceA), e.edgeA)[0]
    want = a_start if side1 == A else s.matched_slot(A, a_start)
    out = g if u0_slot == want else change_frame(g, ENDPOINT_SWAP)
    if side1 != A:
        out = change_frame(out, SIDE_SWAP)
    return i, out.normalized()


def framed(s: Surface, data: Sequence[EdgeGluing], side1: PEdge, u0_slot: int) -> EdgeGluing:
    """Gluing of the edge through side1, with side 1 = side1 and u = 0 at u0_slot."""
    i = s.edge_index(side1)
    e = s.gluings[i]
    A = (e.faceA, e.edgeA)
    g = data[i]
    a_start = edge_slots(s.kind(e.faceA), e.edgeA)[0]
    if side1 != A:
        g = change_frame(g, SIDE_SWAP)
        cur = s.matched_slot(A, a_start)
    else:
        cur = a_start
    if u0_slot != cur:
        if u0_slot not in edge_slots(s.kind(side1[0]), side1[1]):
            raise GluingError(f"slot {u0_slot} is not an endpoint of edge {side1}")
        g = change_frame(g, ENDPOINT_SWAP)
    return g


@dataclass(frozen=True)
class G1Surface:
    """A surface together with canonical-frame gluing data for every interior edge."""

    surface: Surface
    data: Tuple[EdgeGluing, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.data) != len(self.surface.gluings):
            raise MissingGluing(f"{len(self.surface.gluings)} interior edges but "
                                f"{len(self.data)} gluing records")

    def framed(self, side1: PEdge, u0_slot: int) -> EdgeGluing:
        return framed(self.surface, self.data, side1, u0_slot)

    def edge_gluing(self, i: int) -> EdgeGluing:
        return self.data[i]


def attach(s: Surface, records, name: str = "") -> G1Surface:
    """Build canonical data from records (side1, u0_slot, EdgeGluing)."""
    out: Dict[int, EdgeGluing] = {}
    for side1, u0, g in records:
        i, cg = canonical_from_declared(s, tuple(side1), u0, g)
        if i in out:
            raise GluingError(f"edge {i} has two gluing records")
        out[i] = cg
    missing = [i for i in range(len(s.gluings)) if i not in out]
    if missing:
        raise MissingGluing(f"no gluing data for interior edges {missing}")
    return G1Surface(s, tuple(out[i] for i in range(len(s.gluings))), name)


# ---------------------------------------------------------------------------
# vertex checks


def _mul(A: Mat, B: Mat) -> Mat:
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0))
                       for j in range(len(B[0]))) for i in range(len(A)))


def _eye(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def fan_gluings(gs: G1Surface, v: int) -> List[EdgeGluing]:
    """Gluings around a vertex, one per interior corner-to-corner link.

    Entry k couples the corner k (side 1, through its entry edge) with the
    preceding corner; u = 0 at the vertex.  For boundary fans the first corner
    has no preceding gluing and the list starts with corner 2.
    """
    fan = gs.surface.fans[v]
    steps = fan.steps if fan.closed else fan.steps[1:]
    return [gs.framed((st.face, st.entry), st.slot) for st in steps]


@dataclass(frozen=True)
class CycleResult:
    ok: bool
    product: Mat
    partials: Tuple[Mat, ...]


def cycle_matrices(betas: Sequence[Fraction], gammas: Sequence[Fraction]) -> CycleResult:
    M = _eye(2)
    for b, g in zip(betas, gammas):
        M = _mul(M, ((Fraction(0), rat(g)), (Fraction(1), rat(b))))
    partial = []
    P = _eye(2)
    for b, g in list(zip(betas, gammas))[:-1]:
        P = _mul(((Fraction(0), Fraction(1)), (rat(g), rat(b))), P)
        partial.append(P)
    return CycleResult(M == _eye(2), M, tuple(partial))


def vertex_cycle_check(gs: G1Surface, v: int) -> CycleResult:
    if not gs.surface.fans[v].closed:
        raise NotInterior(f"vertex {v} is on the boundary")
    gl = fan_gluings(gs, v)
    return cycle_matrices([g.beta(0) for g in gl], [g.gamma(0) for g in gl])


def boundary_chain(gs: G1Surface, v: int) -> Tuple[Mat, ...]:
    """Partial products T_k ... T_2 of a boundary fan."""
    P = _eye(2)
    out = []
    for g in fan_gluings(gs, v):
        P = _mul(((Fraction(0), Fraction(1)), (g.gamma(0), g.beta(0))), P)
        out.append(P)
    return tuple(out)


def _sector_ok(M: Mat) -> bool:
    rows_ok = all(any(x <= 0 for x in row) for row in M)
    return rows_ok and (M[0][0] <= 0 or M[1][1] <= 0)


def sector_check(partials: Sequence[Mat], boundary: bool = False) -> bool:
    if not all(_sector_ok(M) for M in partials):
        return False
    if boundary and partials:
        return tuple(partials[-1][1]) != (1, 0)
    return True


def crossing_matrix_product(gl: Sequence[EdgeGluing]) -> Mat:
    M = _eye(3)
    for g in gl:
        Mk = ((Fraction(0), Fraction(1), Fraction(0)),
              (g.gamma(0), Fraction(0), Fraction(0)),
              (g.gamma_deriv(0), g.beta_deriv(0), g.gamma(0)))
        M = _mul(Mk, M)
    return M


def crossing_H(gl: Sequence[EdgeGluing]) -> Tuple[Fraction, Fraction]:
    """Closed-form (H1, H2) for four gluings around a crossing vertex."""
    b = [None] + [g.beta_deriv(0) for g in gl]
    c = [None] + [g.gamma(0) for g in gl]
    cd = [None] + [g.gamma_deriv(0) for g in gl]
    H1 = b[4] + c[3] * cd[1] + c[4] * (b[2] + c[1] * cd[3])
    H2 = b[3] + c[2] * cd[4] + c[3] * (b[1] + c[4] * cd[2])
    return H1, H2


def crossing_derivative_check(gs: G1Surface, v: int) -> Tuple[bool, Tuple[Fraction, Fraction]]:
    rep = classify_vertex(gs, v)
    if not rep.isCrossing:
        raise NotCrossing(f"vertex {v} is not a crossing vertex")
    H = crossing_H(fan_gluings(gs, v))
    return H == (0, 0), H


@dataclass(frozen=True)
class VertexReport:
    vertex: int
    label: str
    valency: int
    isBoundary: bool
    joining: Tuple[bool, ...]
    isCrossing: bool
    cycleMatrixOK: bool = True
    crossingDerivativeOK: bool = True
    sectorOK: bool = True
    qbetasOK: bool = True
    H: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def ok(self) -> bool:
        return self.cycleMatrixOK and self.crossingDerivativeOK and self.sectorOK and self.qbetasOK


def classify_vertex(gs: G1Surface, v: int) -> VertexReport:
    s = gs.surface
    fan = s.fans[v]
    gl = fan_gluings(gs, v)
    joining = tuple(g.b(0) == 0 for g in gl)
    crossing = fan.closed and fan.valency == 4 and all(joining)
    rep = VertexReport(v, s.orbit_label(v), fan.valency, not fan.closed, joining, crossing)
    if not fan.closed:
        chain = boundary_chain(gs, v)
        return _replace(rep, sectorOK=sector_check(chain, boundary=True))
    cyc = cycle_matrices([g.beta(0) for g in gl], [g.gamma(0) for g in gl])
    rep = _replace(rep, cycleMatrixOK=cyc.ok, sectorOK=sector_check(cyc.partials))
    if crossing:
        g = [x.gamma(0) for x in gl]
        H = crossing_H(gl)
        rep = _replace(rep, qbetasOK=(g[0] * g[2] == 1 and g[1] * g[3] == 1),
                       crossingDerivativeOK=(H == (0, 0)), H=H)
    return rep


def _replace(rep: VertexReport, **kw) -> VertexReport:
    from dataclasses import replace
    return replace(rep, **kw)


def is_joining_end(gs: G1Surface, i: int, end: int) -> bool:
    return end_frame(gs.data[i], end).b(0) == 0


@dataclass(frozen=True)
class EdgeCheck:
    edge: int
    coprime: bool
    a_nonvanishing: bool
    gamma_negative: bool

    @property
    def ok(self) -> bool:
        return self.coprime and self.a_nonvanishing and self.gamma_negative


@dataclass(frozen=True)
class ValidationReport:
    edges: Tuple[EdgeCheck, ...]
    vertices: Tuple[VertexReport, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.edges) and all(v.ok for v in self.vertices)

    @property
    def edges_ok(self) -> bool:
        return all(e.ok for e in self.edges)

    @property
    def crossing_vertices(self) -> int:
        return sum(1 for v in self.vertices if v.isCrossing)

    def failures(self) -> List[str]:
        out = []
        for e in self.edges:
            for name in ("coprime", "a_nonvanishing", "gamma_negative"):
                if not getattr(e, name):
                    out.append(f"edge {e.edge}: {name} failed")
        for v in self.vertices:
            for name in ("cycleMatrixOK", "sectorOK", "qbetasOK", "crossingDerivativeOK"):
                if not getattr(v, name):
                    extra = f" (H1, H2) = ({v.H[0]}, {v.H[1]})" if name == "crossingDerivativeOK" else ""
                    out.append(f"vertex {v.label}: {name} failed{extra}")
        return out


def validate_g1(gs: G1Surface) -> ValidationReport:
    edges = tuple(EdgeCheck(i, g.is_coprime(), g.a_nonvanishing(), g.gamma_negative())
                  for i, g in enumerate(gs.data))
    if not all(e.a_nonvanishing for e in edges):
        # vertex checks divide by a(0); report the edge failure only
        return ValidationReport(edges, ())
    verts = tuple(classify_vertex(gs, v) for v in range(len(gs.surface.fans)))
    return ValidationReport(edges, verts)
