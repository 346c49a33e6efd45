"""Reproducible normal forms of edge and vertex splines.

Edge splines are taken dual to the end jets: the four side-1 jet entries
(value, d/du, d/dv, mixed) at each end, plus the side-2 mixed entry at every
non-joining end.  Any remaining freedom is thoroughly vanishing; it is fixed
by requiring the top coefficients of h1 to vanish, which keeps the side-1
restriction at the lowest degree.

Vertex splines are lifted from prescribed corner jets with all free BB
coefficients set to zero (see ``splinespace.vertex_spline_from_jets``).

``edge_rows`` returns the three BB rows printed in edge diagrams: side 2
row 1 on top, the shared edge row in the middle and side 1 row 1 below.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import edge_slots
from .edgespline import EdgeSpline, edge_space_basis, is_joining, jet_vector
from .exactalg import (TRIANGLE, UniPoly, default_toward, frame_position, other_neighbour,
                       to_bb)
from .gluing import EdgeGluing, G1Surface
from .linalg import solve
from .splinespace import Spline, vertex_jet_coordinates, vertex_spline_from_jets


def edge_frame(gs: G1Surface, x: str, y: str, side1: str):
    """Gluing of edge xy with u = 0 at x and side 1 on the face containing label side1."""
    s = gs.surface
    for f, p in enumerate(s.polygons):
        L = p.labels
        if side1 not in L:
            continue
        for e in range(p.n):
            a, b = edge_slots(p.kind, e)
            if {L[a], L[b]} == {x, y}:
                slot = a if L[a] == x else b
                return gs.framed((f, e), slot), (f, e, slot)
    raise KeyError((x, y, side1))


def jet_functionals(g: EdgeGluing) -> List[Tuple[int, int, int]]:
    """(end, side, entry) triples; entry indexes (value, d/du, d/dv, mixed)."""
    out = [(0, 1, n) for n in range(4)] + [(1, 1, n) for n in range(4)]
    for end in (0, 1):
        if not is_joining(g, end):
            out.append((end, 2, 3))
    return out


def _column(end: int, side: int, entry: int) -> int:
    return 8 * end + 4 * (side - 1) + entry


def dual_edge_basis(g: EdgeGluing, k: int) -> List[EdgeSpline]:
    """Edge splines dual to ``jet_functionals(g)``, in that order.

    Raises ValueError when M^1_k does not separate the functionals.
    """
    basis = edge_space_basis(g, k)
    J = [jet_vector(e, g) for e in basis]
    funcs = jet_functionals(g)
    n = len(basis)
    # thoroughly vanishing directions are fixed through the top h1 coefficients
    tv_rows = n - len(funcs)
    top = max(e.h1.deg() for e in basis)
    extra = [top - d for d in range(max(tv_rows, 0))]
    rows = []
    for (end, side, entry) in funcs:
        col = _column(end, side, entry)
        rows.append({i: J[i][col] for i in range(n) if J[i][col]})
    for d in extra:
        rows.append({i: basis[i].h1.coeff(d) for i in range(n) if basis[i].h1.coeff(d)})
    out = []
    for t in range(len(funcs)):
        rhs = [Fraction(int(t == r)) for r in range(len(rows))]
        x = solve(rows, rhs, n)
        if x is None:
            raise ValueError(f"degree {k} does not separate the end jets")
        acc = EdgeSpline(UniPoly(), UniPoly(), UniPoly())
        for c, e in zip(x, basis):
            if c:
                acc = acc + e.scale(c)
        out.append(acc)
    return out


def edge_rows(e: EdgeSpline, g: EdgeGluing, k: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """(side-2 row 1, edge row, side-1 row 1) of the BB forms in the edge frame."""
    kinds = ["rectangle" if r else TRIANGLE for r in (g.r1, g.r2)]
    b1 = to_bb(e.side(1), kinds[0], k)
    b2 = to_bb(e.side(2), kinds[1], k)
    return b2.coeffs[1], b1.coeffs[0], b1.coeffs[1]


def _vertex_index(gs: G1Surface, label: str) -> int:
    s = gs.surface
    for v, fan in enumerate(s.fans):
        st = fan.steps[0]
        if s.polygons[st.face].labels[st.slot] == label:
            return v
    raise KeyError(label)


def _slot_of(gs: G1Surface, f: int, label: str) -> int:
    return gs.surface.polygons[f].labels.index(label)


def corner_pattern_jets(gs: G1Surface, v: str, k: int, centre, edges: Dict[str, object],
                        diagonals: Dict[Tuple[str, str], object]) -> List[Tuple[Fraction, ...]]:
    """Fan-ordered jets at v from its blended 2x2 corner arrays.

    ``edges`` maps a neighbour label to the control point next to v on that
    edge, ``diagonals`` maps an unordered neighbour pair to the corner
    interior point of the polygon they span.  Missing entries are 0.
    """
    vi = _vertex_index(gs, v)
    c0 = Fraction(centre)
    out = []
    for f, slot in vertex_jet_coordinates(gs, vi):
        p = gs.surface.polygons[f]
        t = default_toward(p.kind, slot)
        o = other_neighbour(p.kind, slot, t)
        lt, lo = p.labels[t], p.labels[o]
        c1 = Fraction(edges.get(lt, 0))
        c2 = Fraction(edges.get(lo, 0))
        c3 = Fraction(diagonals.get((lt, lo), diagonals.get((lo, lt), 0)))
        mixed = k * (k - 1) if p.kind == TRIANGLE else k * k
        out.append((c0, k * (c1 - c0), k * (c2 - c0), mixed * (c3 - c2 - c1 + c0)))
    return out


def vertex_figure_spline(gs: G1Surface, v: str, k: int, centre, edges, diagonals,
                         pattern_degree: Optional[int] = None) -> Spline:
    """Lift of a corner pattern; the pattern is read at pattern_degree (default k)."""
    jets = corner_pattern_jets(gs, v, pattern_degree or k, centre, edges, diagonals)
    return vertex_spline_from_jets(gs, _vertex_index(gs, v), k, jets)


def diamond(gs: G1Surface, sp: Spline, centre: str, left: str, right: str, up: str,
            down: str) -> List[List[Fraction]]:
    """Control points of the four polygons around a valency-4 vertex.

    Row k is the left-centre-right line, rows above it lie in the two upper
    polygons and rows below in the lower ones; each row is read left to right.
    """
    k = sp.degree
    grid: Dict[Tuple[int, int], Fraction] = {}
    quads = [(left, up, -1, -1), (right, up, 1, -1), (left, down, -1, 1), (right, down, 1, 1)]
    for h, w, sx, sy in quads:
        f = _face_with(gs, centre, h, w)
        p = gs.surface.polygons[f]
        s, t, o = p.labels.index(centre), p.labels.index(h), p.labels.index(w)
        if other_neighbour(p.kind, s, t) != o:
            raise ValueError("labels do not span a corner")
        form = sp.forms[f]
        for a in range(k + 1):
            for b in range(k + 1 - (a if p.kind == TRIANGLE else 0)):
                val = form.get(*frame_position(p.kind, k, s, t, a, b))
                key = (k + sy * b, k + sx * a)
                if key in grid and grid[key] != val:
                    raise ValueError("inconsistent shared control point")
                grid[key] = val
    return [[grid[(r, c)] for c in range(2 * k + 1) if (r, c) in grid] for r in range(2 * k + 1)]


def _face_with(gs: G1Surface, *labels: str) -> int:
    for f, p in enumerate(gs.surface.polygons):
        if all(x in p.labels for x in labels):
            return f
    raise KeyError(labels)


def cross_pattern(rows: Sequence[Sequence], left: str, right: str, up: str, down: str):
    """(centre, edges, diagonals) from a 3x3 corner pattern around a valency-4 vertex."""
    (ul, u, ur), (l, c, r), (dl, d, dr) = [[Fraction(x) for x in row] for row in rows if row]
    edges = {left: l, right: r, up: u, down: d}
    diagonals = {(left, up): ul, (up, right): ur, (left, down): dl, (right, down): dr}
    return c, edges, diagonals


def fan3_pattern(rows: Sequence[Sequence], left: str, upper: str, lower: str):
    """(centre, edges, diagonals) from the corner pattern of a valency-3 vertex.

    The left edge separates two triangles; the right entry of the middle row
    is the corner interior point of the polygon spanned by upper and lower.
    """
    (tu, u), (l, c, q), (tl, d) = [[Fraction(x) for x in row] for row in rows if row]
    edges = {left: l, upper: u, lower: d}
    diagonals = {(left, upper): tu, (left, lower): tl, (upper, lower): q}
    return c, edges, diagonals


def fan3_lattice(gs: G1Surface, sp: Spline, centre: str, left: str, upper: str,
                 lower: str) -> Dict[Tuple[int, int], Fraction]:
    """Control points around a valency-3 vertex on a skew lattice.

    The centre sits at (k, 2k-1); a step towards left moves two columns left,
    towards upper one row up and one column right, towards lower one row down
    and one column right.
    """
    k = sp.degree
    steps = {left: (0, -2), upper: (-1, 1), lower: (1, 1)}
    out: Dict[Tuple[int, int], Fraction] = {}
    for h, w in ((left, upper), (left, lower), (upper, lower)):
        f = _face_with(gs, centre, h, w)
        p = gs.surface.polygons[f]
        s, t = p.labels.index(centre), p.labels.index(h)
        form = sp.forms[f]
        for a in range(k + 1):
            for b in range(k + 1 - (a if p.kind == TRIANGLE else 0)):
                key = (k + a * steps[h][0] + b * steps[w][0], 2 * k - 1 + a * steps[h][1] + b * steps[w][1])
                out[key] = form.get(*frame_position(p.kind, k, s, t, a, b))
    return out
