"""Edge spline spaces M^1_k and their end-point jet maps.

An edge spline is the pair (h0 + h1 v1, h0 + h2 v2) of first-order data along
a glued edge.  In the frame of the gluing (a, b, c) it is G1 exactly when
(-h1, h0', h2) is a syzygy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactalg import BiPoly, Jet11, UniPoly, jet_of_poly, rat
from .gluing import EdgeGluing, end_frame
from .linalg import matrix_rank, nullspace
from .syzygy import Syzygy, mu_basis, syzygy_basis


@dataclass(frozen=True)
class EdgeSpline:
    h0: UniPoly
    h1: UniPoly
    h2: UniPoly

    @classmethod
    def make(cls, h0, h1, h2) -> "EdgeSpline":
        lift = lambda p: p if isinstance(p, UniPoly) else UniPoly(p if isinstance(p, (list, tuple)) else [p])
        return cls(lift(h0), lift(h1), lift(h2))

    def side(self, i: int) -> BiPoly:
        return BiPoly.edge_form(self.h0, self.h1 if i == 1 else self.h2)

    def syzygy(self) -> Syzygy:
        return spline_to_syzygy(self)

    def is_g1(self, g: EdgeGluing) -> bool:
        return self.syzygy().is_syzygy(g)

    def fits(self, g: EdgeGluing, k: int) -> bool:
        return (self.h0.deg() <= k and self.h1.deg() <= k - 1 + g.r1
                and self.h2.deg() <= k - 1 + g.r2)

    def __add__(self, o: "EdgeSpline") -> "EdgeSpline":
        return EdgeSpline(self.h0 + o.h0, self.h1 + o.h1, self.h2 + o.h2)

    def scale(self, c) -> "EdgeSpline":
        return EdgeSpline(self.h0 * c, self.h1 * c, self.h2 * c)

    def __repr__(self):
        return f"EdgeSpline(h0={self.h0!r}, h1={self.h1!r}, h2={self.h2!r})"


def syzygy_to_edge_spline(z: Syzygy, c0=0) -> EdgeSpline:
    """h0 = c0 + int_0^u B, h1 = -A, h2 = C."""
    return EdgeSpline(z.B.integral() + rat(c0), -z.A, z.C)


def spline_to_syzygy(e: EdgeSpline) -> Syzygy:
    return Syzygy(-e.h1, e.h0.derive(), e.h2)


def edge_space_basis(g: EdgeGluing, k: int) -> List[EdgeSpline]:
    """Basis of M^1_k: the constant spline followed by the syzygies of Z_k."""
    out = [EdgeSpline(UniPoly([1]), UniPoly(), UniPoly())]
    out.extend(syzygy_to_edge_spline(z) for z in syzygy_basis(g, k))
    return out


def edge_space_dim(g: EdgeGluing, k: int) -> int:
    if k < 0:
        return 0
    from .syzygy import syzygy_space_dim
    return syzygy_space_dim(mu_basis(g), k) + 1


def _end_jet(p: BiPoly, shear: int) -> Jet11:
    # standard frame at u = 1: u = 1 - u' - shear v', v = v'
    return jet_of_poly(p.substitute((1, -1, -shear), (0, 0, 1)))


def w_jets(e: EdgeSpline, g: EdgeGluing):
    """((side-1 jet, side-2 jet) at u = 0, (side-1 jet, side-2 jet) at u = 1)."""
    s1, s2 = g.shears
    p1, p2 = e.side(1), e.side(2)
    return (jet_of_poly(p1), jet_of_poly(p2)), (_end_jet(p1, s1), _end_jet(p2, s2))


def jet_vector(e: EdgeSpline, g: EdgeGluing, ends=(0, 1)) -> List[Fraction]:
    w = w_jets(e, g)
    out: List[Fraction] = []
    for end in ends:
        for j in w[end]:
            out.extend(j.as_tuple())
    return out


def is_joining(g: EdgeGluing, end: int) -> bool:
    return end_frame(g, end).b(0) == 0


def im_w_dim(g: EdgeGluing, end: int) -> int:
    return 4 if is_joining(g, end) else 5


def w_rank(g: EdgeGluing, k: int, ends=(0, 1)) -> int:
    return matrix_rank([jet_vector(e, g, ends) for e in edge_space_basis(g, k)])


def thoroughly_vanishing(g: EdgeGluing, k: int) -> List[EdgeSpline]:
    """Basis of ker(W0 + W1) inside M^1_k."""
    basis = edge_space_basis(g, k)
    M = [jet_vector(e, g) for e in basis]
    # columns of M are the jet functionals; solve x^T M = 0
    rows = [{i: M[i][j] for i in range(len(basis)) if M[i][j]} for j in range(len(M[0]) if M else 0)]
    out = []
    for x in nullspace(rows, len(basis)):
        acc = EdgeSpline(UniPoly(), UniPoly(), UniPoly())
        for c, e in zip(x, basis):
            if c:
                acc = acc + e.scale(c)
        out.append(acc)
    return out


@dataclass(frozen=True)
class EdgeReport:
    delta: int
    d1: int
    d2: int
    separatingDegree: Optional[int]
    offsetDegree: Optional[int]
    completeSeparationDegree: Optional[int]
    separatingBound: int
    offsetBound: int
    completeSeparationBound: int
    refinedCompleteSeparationBound: int
    joining: Tuple[bool, bool]


def _has_separating(g: EdgeGluing, k: int) -> bool:
    return any(e.h0(1) != e.h0(0) for e in edge_space_basis(g, k))


def _has_offset(g: EdgeGluing, k: int) -> bool:
    basis = edge_space_basis(g, k)
    vecs = [jet_vector(e, g) for e in basis]
    # every non-constant jet entry must vanish
    cols = [j for j in range(16) if j % 4 != 0]
    rows = [{i: vecs[i][j] for i in range(len(basis)) if vecs[i][j]} for j in cols]
    for x in nullspace(rows, len(basis)):
        diff = sum((c * (e.h0(1) - e.h0(0)) for c, e in zip(x, basis)), Fraction(0))
        if diff:
            return True
    return False


def _complete(g: EdgeGluing, k: int) -> bool:
    return w_rank(g, k) == im_w_dim(g, 0) + im_w_dim(g, 1)


def refined_bounds(d1: int, d2: int, joining: Tuple[bool, bool]) -> Tuple[int, int]:
    """(offset bound, complete separation bound) using the joining-edge refinements.

    These are the degrees where the refined constructions may already work;
    they are not guaranteed (rect-rect (-1, 0, 1 + u^2) needs 5, not 4).
    """
    both = all(joining)
    if both and d1 < d2:
        off = max(2 * d1 + 1, d2 + 2)
    elif any(joining):
        off = max(2 * d1 + 2, d2 + 3)
    else:
        off = max(2 * d1 + 3, d2 + 4)
    return off, max(off, d2 + (2 if both else 3))


def separation_profile(g: EdgeGluing, kmax: Optional[int] = None) -> EdgeReport:
    from .syzygy import edge_delta
    m = mu_basis(g)
    d1, d2 = m.d1, m.d2
    sep_b = max(2 * d1 - 1, d2)
    csep_b = max(2 * d1 + 3, d2 + 4)
    joining = (is_joining(g, 0), is_joining(g, 1))
    _, refined = refined_bounds(d1, d2, joining)
    top = kmax if kmax is not None else csep_b + 2

    def least(pred) -> Optional[int]:
        for k in range(0, top + 1):
            if pred(g, k):
                return k
        return None

    return EdgeReport(edge_delta(g), d1, d2, least(_has_separating), least(_has_offset), least(_complete),
                      sep_b, csep_b, csep_b, refined, joining)


def completely_separates(g: EdgeGluing, k: int) -> bool:
    return _complete(g, k)
