"""Construction of rational G1 gluing data.

The automatic route follows the usual recipe: pick tangent-sector relations
(beta(0), gamma(0)) at every vertex, bring the two end values of each edge to
a common frame, interpolate gamma linearly, and interpolate beta by the lowest
degree numerator compatible with the crossing-vertex derivative conditions.
Those conditions are linear in the unknown end derivatives, so the walk along
crossing rims and equators is done as one exact linear solve; edges are
raised to cubic numerators one at a time only when the quadratic system is
inconsistent.

Planar and translation-glued surfaces use parametric continuity instead:
faces are placed in the plane and beta, gamma are read from the placement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import Surface, build_surface, edge_slots
from .exactalg import RECTANGLE, TRIANGLE, UniPoly, other_neighbour, rat
from .gluing import EdgeGluing, G1Surface, attach
from .linalg import solve


class BuilderError(ValueError):
    pass


class IrrationalValue(BuilderError):
    pass


class InfeasibleParams(BuilderError):
    pass


class InfeasibleInterpolation(BuilderError):
    pass


class UnknownName(BuilderError):
    pass


# ---------------------------------------------------------------------------
# vertex designs


_HAHN = {3: Fraction(-1), 4: Fraction(0), 6: Fraction(1)}


def hahn_vertex_data(n: int) -> Tuple[Fraction, Fraction]:
    """(beta(0), gamma(0)) = (2 cos(2 pi / n), -1) when this is rational."""
    if n < 3:
        raise BuilderError("an interior vertex needs at least three polygons")
    if n not in _HAHN:
        raise IrrationalValue(f"2cos(2pi/{n}) is irrational; supply a rational surrogate")
    return _HAHN[n], Fraction(-1)


_HALF_HAHN = {2: Fraction(0), 3: Fraction(1)}


def boundary_vertex_data(n: int) -> Tuple[Fraction, Fraction]:
    """Evenly spaced sectors over a half plane for a boundary vertex with n polygons."""
    if n not in _HALF_HAHN:
        raise IrrationalValue(f"2cos(pi/{n}) is irrational; supply a rational surrogate")
    return _HALF_HAHN[n], Fraction(-1)


@dataclass(frozen=True)
class VertexDesign:
    """End values in fan order (one entry per gluing link of the vertex fan)."""

    betas: Tuple[Fraction, ...]
    gammas: Tuple[Fraction, ...]
    beta_derivs: Optional[Tuple[Optional[Fraction], ...]] = None


def _unit_gamma_cycle_ok(betas: Sequence[Fraction]) -> bool:
    from .gluing import cycle_matrices
    return cycle_matrices(list(betas), [-1] * len(betas)).ok


def solve_unit_gamma_vertex(n: int, params: Sequence) -> VertexDesign:
    """Solve the unit-gamma cycle relations for the remaining beta values.

    n = 3: no parameters (Hahn's symmetric data).
    n = 4: params = (branch, t); branch 1 gives (0, t, 0, -t), branch 2 gives (t, 0, -t, 0).
    n = 5: params = (beta1, beta2, beta3).
    n = 6: params = (beta1, beta2, beta3, beta4).
    """
    p = [rat(x) for x in params]
    if n == 3:
        betas = [Fraction(-1)] * 3
    elif n == 4:
        branch, t = int(p[0]), p[1]
        betas = [Fraction(0), t, Fraction(0), -t] if branch == 1 else [t, Fraction(0), -t, Fraction(0)]
    elif n == 5:
        b1, b2, b3 = p
        if b1 + b3 != 1 + b1 * b2 * b3:
            raise InfeasibleParams("beta1 + beta3 = 1 + beta1 beta2 beta3 fails")
        # the last two values follow from inverting T1 T2 T3 in the cycle product
        betas = [b1, b2, b3, 1 - b1 * b2, 1 - b2 * b3]
    elif n == 6:
        b1, b2, b3, b4 = p
        if b1 * b2 + b1 * b4 + b3 * b4 != 2 + b1 * b2 * b3 * b4:
            raise InfeasibleParams("beta1 beta2 + beta1 beta4 + beta3 beta4 = 2 + beta1 beta2 beta3 beta4 fails")
        betas = [b1, b2, b3, b4, b1 + b3 - b1 * b2 * b3, b2 + b4 - b2 * b3 * b4]
    else:
        raise InfeasibleParams(f"valency {n} is not supported")
    if not _unit_gamma_cycle_ok(betas):
        raise InfeasibleParams("cycle matrix product is not the identity")  # pragma: no cover
    return VertexDesign(tuple(betas), tuple(Fraction(-1) for _ in betas))


# ---------------------------------------------------------------------------
# edge interpolation


@dataclass(frozen=True)
class EndDesign:
    """beta(0), gamma(0) and optionally beta'(0) in the standard frame at one end."""

    beta: Fraction
    gamma: Fraction
    beta_deriv: Optional[Fraction] = None

    @classmethod
    def make(cls, beta, gamma=-1, beta_deriv=None) -> "EndDesign":
        return cls(rat(beta), rat(gamma), None if beta_deriv is None else rat(beta_deriv))


def _hermite(v0: Fraction, d0: Optional[Fraction], v1: Fraction, d1: Optional[Fraction]) -> UniPoly:
    """Lowest degree polynomial with the given end values and derivatives."""
    if d0 is None and d1 is None:
        return UniPoly([v0, v1 - v0])
    if d1 is None:
        return UniPoly([v0, d0, v1 - v0 - d0])
    if d0 is None:
        # p = v0 + x u + y u^2 with x + y = v1 - v0, x + 2y = d1
        y = d1 - (v1 - v0)
        return UniPoly([v0, (v1 - v0) - y, y])
    # cubic Hermite
    D = v1 - v0
    return UniPoly([v0, d0, 3 * D - 2 * d0 - d1, d0 + d1 - 2 * D])


def common_end_values(endA: EndDesign, endB: EndDesign, sides=(0, 0)):
    """Values of beta, gamma at u = 0 and u = 1 in the frame with u = 0 at endA.

    The derivative at u = 1 is returned in the u-direction of this frame,
    assuming gamma is interpolated linearly.
    """
    s1, s2 = 1 - sides[0], 1 - sides[1]
    g0, g1 = endA.gamma, endB.gamma
    gd = g1 - g0
    b0 = endA.beta
    b1 = s1 - s2 * g1 - endB.beta
    d1 = None if endB.beta_deriv is None else endB.beta_deriv - s2 * gd
    return b0, endA.beta_deriv, b1, d1, g0, g1


def interpolate_edge(endA: EndDesign, endB: EndDesign, sides: Tuple[int, int] = (0, 0),
                     policy: str = "auto") -> EdgeGluing:
    """Gluing (a, b, c) on an edge from end designs in the end frames.

    ``sides`` are the rectangle flags (r1, r2).  Policies: ``linear``,
    ``fractional-linear`` (one prescribed end derivative, constant gamma),
    ``quadratic`` (one prescribed derivative), ``cubic`` (both) and ``auto``.
    """
    b0, d0, b1, d1, g0, g1 = common_end_values(endA, endB, sides)
    given = (d0 is not None) + (d1 is not None)
    if policy == "auto":
        policy = {0: "linear", 1: "quadratic", 2: "cubic"}[given]
    c = UniPoly([g0, g1 - g0])
    if policy == "linear":
        if given:
            raise InfeasibleInterpolation("linear interpolation cannot honour prescribed derivatives")
        return EdgeGluing(UniPoly([1]), _hermite(b0, None, b1, None), c, *sides).normalized()
    if policy in ("quadratic", "cubic"):
        if policy == "quadratic" and given != 1:
            raise InfeasibleInterpolation("quadratic interpolation needs exactly one end derivative")
        if policy == "cubic" and given != 2:
            raise InfeasibleInterpolation("cubic interpolation needs both end derivatives")
        return EdgeGluing(UniPoly([1]), _hermite(b0, d0, b1, d1), c, *sides).normalized()
    if policy == "fractional-linear":
        if g0 != g1:
            raise InfeasibleInterpolation("fractional-linear beta needs a constant gamma here")
        if given == 0:
            return EdgeGluing(UniPoly([1]), _hermite(b0, None, b1, None), c, *sides).normalized()
        if given != 1:
            raise InfeasibleInterpolation("fractional-linear interpolation takes at most one end derivative")
        flip = d0 is None
        if flip:
            # mirror: work from the other end where the derivative is prescribed
            b0, b1, d0 = b1, b0, -d1
        # beta = (p + q u) / (1 + r u): beta(0) = p, beta'(0) = q - p r, beta(1) = (p + q)/(1 + r)
        p = b0
        if p == b1:
            raise InfeasibleInterpolation("degenerate fractional-linear system")
        r = (b1 - p - d0) / (p - b1)
        q = d0 + p * r
        if r <= -1:
            raise InfeasibleInterpolation("denominator vanishes on the edge")
        a = UniPoly([1, r])
        b = UniPoly([p, q])
        if flip:
            mirror = UniPoly([1, -1])
            a, b = a.compose(mirror), b.compose(mirror)
        return EdgeGluing(a, b, a * g0, *sides).normalized()
    raise BuilderError(f"unknown interpolation policy {policy!r}")


# ---------------------------------------------------------------------------
# automatic gluing on a bare complex


@dataclass(frozen=True)
class EquatorPlan:
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]
    closed: bool
    seed: Optional[Fraction] = None


def _fan_links(s: Surface, v: int):
    """(edge index, end, side swapped?) for each gluing link of the fan of v."""
    fan = s.fans[v]
    steps = fan.steps if fan.closed else fan.steps[1:]
    out = []
    for st in steps:
        pe = (st.face, st.entry)
        i = s.edge_index(pe)
        g = s.gluings[i]
        A = (g.faceA, g.edgeA)
        a0 = edge_slots(s.kind(g.faceA), g.edgeA)[0]
        if pe == A:
            end = 0 if st.slot == a0 else 1
            swapped = False
        else:
            end = 0 if st.slot == s.matched_slot(A, a0) else 1
            swapped = True
        out.append((i, end, swapped))
    return out


def crossing_rims(s: Surface, crossing: Sequence[int]) -> List[EquatorPlan]:
    """Maximal crossing rims and crossing equators through the given vertices."""
    cross = set(crossing)
    opposite: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for v in cross:
        links = _fan_links(s, v)
        for j in range(4):
            i, end, _ = links[j]
            k, end2, _ = links[(j + 2) % 4]
            opposite[(i, end)] = (k, end2)
    seen = set()
    plans = []
    ends_at = lambda i, end: s.edge_endpoints(i)[end]
    for (i, end) in sorted(opposite):
        if i in seen:
            continue
        # walk backwards to a non-crossing end, if any
        closed = False
        # extend forward from (i, end)
        fwd_edges, fwd_verts = [], []
        ci, ce = i, end
        while (ci, ce) in opposite:
            fwd_verts.append(ends_at(ci, ce))
            ni, ne = opposite[(ci, ce)]
            if ni == i:
                closed = True
                break
            fwd_edges.append(ni)
            ci, ce = ni, 1 - ne
        back_edges, back_verts = [], []
        if not closed:
            ci, ce = i, 1 - end
            while (ci, ce) in opposite:
                back_verts.append(ends_at(ci, ce))
                ni, ne = opposite[(ci, ce)]
                back_edges.append(ni)
                ci, ce = ni, 1 - ne
        edges = list(reversed(back_edges)) + [i] + fwd_edges
        verts = list(reversed(back_verts)) + fwd_verts
        seen.update(edges)
        plans.append(EquatorPlan(tuple(edges), tuple(verts), closed))
    return plans


def _side_flags(s: Surface, i: int) -> Tuple[int, int]:
    g = s.gluings[i]
    return int(s.kind(g.faceA) == RECTANGLE), int(s.kind(g.faceB) == RECTANGLE)


def default_designs(s: Surface, overrides: Optional[Dict[int, VertexDesign]] = None) -> Dict[int, VertexDesign]:
    out = {}
    for v, fan in enumerate(s.fans):
        if overrides and v in overrides:
            out[v] = overrides[v]
            continue
        links = len(fan.steps) if fan.closed else len(fan.steps) - 1
        if links == 0:
            continue
        if fan.closed:
            b, g = hahn_vertex_data(fan.valency)
        else:
            b, g = boundary_vertex_data(fan.valency)
        out[v] = VertexDesign(tuple([b] * links), tuple([g] * links))
    return out


def hahn_gluing(s: Surface, designs: Optional[Dict[int, VertexDesign]] = None, name: str = "") -> G1Surface:
    """Automatic gluing data (linear gamma, lowest degree beta numerators)."""
    designs = default_designs(s, designs)
    nE = len(s.gluings)
    end_vals: Dict[Tuple[int, int], Tuple[Fraction, Fraction, Optional[Fraction]]] = {}
    for v, d in designs.items():
        for j, (i, end, swapped) in enumerate(_fan_links(s, v)):
            b, g = d.betas[j], d.gammas[j]
            bd = d.beta_derivs[j] if d.beta_derivs else None
            if swapped:
                # (beta, gamma) -> (-beta/gamma, 1/gamma) for the other side as side 1
                b2, g2 = -b / g, 1 / g
                bd2 = None if bd is None else -bd / g  # gamma' = 0 at prescribed ends
                b, g, bd = b2, g2, bd2
            key = (i, end)
            if key in end_vals and end_vals[key][:2] != (b, g):
                raise BuilderError(f"inconsistent end values on edge {i}")
            end_vals[key] = (b, g, bd)
    for i in range(nE):
        for end in (0, 1):
            if (i, end) not in end_vals:
                raise BuilderError(f"edge {i} has no design at end {end}")

    # crossing vertices: all links joining at a closed fan of four polygons
    crossing = [v for v, fan in enumerate(s.fans)
                if fan.closed and fan.valency == 4 and v in designs and all(b == 0 for b in designs[v].betas)]

    # unknowns: x[i] = beta'(0) at end 0; optional z[i] = beta'(0) at end 1 (cubic edges)
    info = {}
    for i in range(nE):
        r = _side_flags(s, i)
        bA, gA, dA = end_vals[(i, 0)]
        bB, gB, dB = end_vals[(i, 1)]
        b0, _, b1, _, g0, g1 = common_end_values(EndDesign(bA, gA), EndDesign(bB, gB), r)
        info[i] = dict(r=r, b0=b0, b1=b1, g0=g0, g1=g1, ends=(EndDesign(bA, gA, dA), EndDesign(bB, gB, dB)))

    def assemble(cubic: set):
        # columns: 0..nE-1 -> x_i, nE + i -> z_i; value is slope offset from the linear interpolant
        rows, rhs = [], []
        for i in range(nE):
            for end in (0, 1):
                d = info[i]["ends"][end].beta_deriv
                if d is not None:
                    row, const = _end_deriv_expr(info[i], end, i, nE, cubic)
                    rows.append(row)
                    rhs.append(d - const)
        for v in crossing:
            links = _fan_links(s, v)
            exprs = []
            for (i, end, swapped) in links:
                row, const = _end_deriv_expr(info[i], end, i, nE, cubic)
                g_end = info[i]["g0"] if end == 0 else info[i]["g1"]
                if swapped:
                    f = -1 / g_end
                    row = {c: f * x for c, x in row.items()}
                    const = f * const
                exprs.append((row, const))
            gam = []
            gam_d = []
            for (i, end, swapped) in links:
                g_end = info[i]["g0"] if end == 0 else info[i]["g1"]
                gd = (info[i]["g1"] - info[i]["g0"]) * (1 if end == 0 else -1)
                if swapped:
                    gd = -gd / g_end ** 2
                    g_end = 1 / g_end
                gam.append(g_end)
                gam_d.append(gd)
            # H1 = b4' + g3 g1' + g4 (b2' + g1 g3'); H2 = b3' + g2 g4' + g3 (b1' + g4 g2')
            b = exprs
            g, gd = gam, gam_d
            H1_row = _lin([(1, b[3]), (g[3], b[1])])
            H1_c = g[2] * gd[0] + g[3] * g[0] * gd[2]
            H2_row = _lin([(1, b[2]), (g[2], b[0])])
            H2_c = g[1] * gd[3] + g[2] * g[3] * gd[1]
            for row, c in (H1_row, H1_c), (H2_row, H2_c):
                rr, cc = row
                rows.append(rr)
                rhs.append(-(cc + c))
        return rows, rhs

    cubic: set = set()
    candidates = [i for i in range(nE) if all(s.edge_endpoints(i)[e] in crossing for e in (0, 1))]
    # edges inside rims get the highest columns so they stay free, hence linear
    order = [i for i in range(nE) if i not in candidates] + candidates
    col = {i: n for n, i in enumerate(order)}
    col.update({nE + i: nE + n for n, i in enumerate(order)})
    while True:
        rows, rhs = assemble(cubic)
        perm = [{col[c]: v for c, v in r.items()} for r in rows]
        psol = solve(perm, rhs, 2 * nE)
        if psol is not None:
            sol = {c: psol[col[c]] for c in col}
            break
        remaining = [i for i in candidates if i not in cubic]
        if not remaining:
            raise InfeasibleInterpolation("crossing-vertex conditions cannot be met")
        cubic.add(remaining[0])

    data = []
    for i in range(nE):
        inf = info[i]
        slope = inf["b1"] - inf["b0"]
        d0 = slope + sol[i]
        if i in cubic:
            d1 = slope + sol[nE + i]
            b = _hermite(inf["b0"], d0, inf["b1"], d1)
        else:
            b = _hermite(inf["b0"], d0, inf["b1"], None)
        c = UniPoly([inf["g0"], inf["g1"] - inf["g0"]])
        data.append(EdgeGluing(UniPoly([1]), b, c, *inf["r"]).normalized())
    return G1Surface(s, tuple(data), name)


def _lin(terms):
    row: Dict[int, Fraction] = {}
    const = Fraction(0)
    for f, (r, c) in terms:
        for k, v in r.items():
            row[k] = row.get(k, 0) + f * v
        const += f * c
    return ({k: v for k, v in row.items() if v}, const)


def _end_deriv_expr(inf, end: int, i: int, nE: int, cubic: set):
    """beta'(0) in the end frame as (row over unknowns, constant)."""
    slope = inf["b1"] - inf["b0"]
    s2 = 1 - inf["r"][1]
    gd = inf["g1"] - inf["g0"]
    if end == 0:
        return {i: Fraction(1)}, slope
    # derivative along the edge at u = 1, then to the end frame: beta_B'(0) = beta'(1) + s2 gamma'(1)
    if i in cubic:
        return {nE + i: Fraction(1)}, slope + s2 * gd
    # quadratic numerator: b'(1) = 2 slope - b'(0); offsets: b'(1) - slope = -(b'(0) - slope)
    return {i: Fraction(-1)}, slope + s2 * gd


# ---------------------------------------------------------------------------
# parametric continuity


def placement_gluing(s: Surface, placements: Sequence[Sequence[Tuple]], name: str = "") -> G1Surface:
    """Gluing data of faces placed in the plane by affine maps.

    ``placements[f]`` lists plane positions of the slots of face f.  Gluings
    are by translations: the edge vectors of matched edges must agree.
    """
    P = [[(rat(x), rat(y)) for x, y in pl] for pl in placements]
    recs = []
    for i, g in enumerate(s.gluings):
        fA, eA, fB = g.faceA, g.edgeA, g.faceB
        sA, tA = edge_slots(s.kind(fA), eA)
        oA = other_neighbour(s.kind(fA), sA, tA)
        sB = s.matched_slot((fA, eA), sA)
        tB = s.matched_slot((fA, eA), tA)
        oB = other_neighbour(s.kind(fB), sB, tB)
        sub = lambda p, q: (p[0] - q[0], p[1] - q[1])
        U = sub(P[fA][tA], P[fA][sA])
        UB = sub(P[fB][tB], P[fB][sB])
        if U != UB:
            raise BuilderError(f"edge {i}: placements do not match by a translation")
        V1 = sub(P[fA][oA], P[fA][sA])
        V2 = sub(P[fB][oB], P[fB][sB])
        det = U[0] * V2[1] - U[1] * V2[0]
        if det == 0:
            raise BuilderError(f"edge {i}: degenerate placement")
        beta = (V1[0] * V2[1] - V1[1] * V2[0]) / det
        gamma = (U[0] * V1[1] - U[1] * V1[0]) / det
        recs.append(((fA, eA), sA, EdgeGluing(UniPoly([1]), UniPoly([beta]), UniPoly([gamma]))))
    return attach(s, recs, name)


def planar_mesh(cells: Sequence[Tuple[int, int, str]], name: str = "planar") -> G1Surface:
    """Faces on an integer grid: (i, j, "square" | "slash" | "backslash").

    Each cell [i, i+1] x [j, j+1] is a unit square or two triangles split
    along a diagonal.  Gluings are inferred from shared grid vertices.
    """
    polys, places = [], []
    lab = lambda x, y: f"{x},{y}"
    for i, j, mode in cells:
        p00, p10, p11, p01 = (i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)
        if mode == "square":
            quads = [[p00, p10, p11, p01]]
        elif mode == "slash":
            quads = [[p00, p10, p11], [p00, p11, p01]]
        elif mode == "backslash":
            quads = [[p00, p10, p01], [p10, p11, p01]]
        else:
            raise BuilderError(f"unknown cell mode {mode!r}")
        for q in quads:
            polys.append({"kind": RECTANGLE if len(q) == 4 else TRIANGLE,
                          "vertices": [lab(*pt) for pt in q]})
            places.append(q)
    s = build_surface({"polygons": polys})
    return placement_gluing(s, places, name)


def random_planar_mesh(rng: random.Random, min_faces: int = 2, max_faces: int = 8) -> G1Surface:
    """Random edge-connected cell subset of a 3x3 grid with 2..8 faces."""
    while True:
        cells = [(i, j) for i in range(3) for j in range(3)]
        rng.shuffle(cells)
        chosen = [cells[0]]
        target = rng.randint(1, 6)
        while len(chosen) < target:
            nb = [c for c in cells if c not in chosen and any(
                abs(c[0] - d[0]) + abs(c[1] - d[1]) == 1 for d in chosen)]
            if not nb:
                break
            chosen.append(rng.choice(sorted(nb)))
        modes = [rng.choice(["square", "slash", "backslash"]) for _ in chosen]
        nf = sum(1 if m == "square" else 2 for m in modes)
        if min_faces <= nf <= max_faces:
            return planar_mesh([(i, j, m) for (i, j), m in zip(chosen, modes)])


# ---------------------------------------------------------------------------
# built-in surfaces


def _labeled(faces: Sequence[str], rect: Sequence[str] = ()) -> Surface:
    polys = [{"kind": TRIANGLE, "vertices": list(f)} for f in faces]
    polys += [{"kind": RECTANGLE, "vertices": list(r)} for r in rect]
    return build_surface({"polygons": polys})


def edge_record(s: Surface, x: str, y: str, beta: UniPoly, gamma: UniPoly = UniPoly([-1]),
                denom: UniPoly = UniPoly([1])):
    """Record for edge xy with u = 0 at x: d_v1 = beta d_u + gamma d_v2 (beta, gamma over denom)."""
    for f, p in enumerate(s.polygons):
        L = p.labels
        for e in range(p.n):
            a, b = edge_slots(p.kind, e)
            if {L[a], L[b]} == {x, y}:
                return (f, e), (a if L[a] == x else b), EdgeGluing(denom, beta, gamma)
    raise KeyError((x, y))


_PO_TRIANGLES = ["AEF", "CFE", "ABE", "BCE", "ADF", "CDF"]


def _pruned_octahedron(alt: bool) -> G1Surface:
    s = _labeled(_PO_TRIANGLES, ["ABCD"])
    lin = UniPoly([0, 2])
    recs = [edge_record(s, x, y, lin) for x, y in
            ["EF", "EA", "EC", "FA", "FC", "AB", "AD", "CB", "CD"]]
    if alt:
        a = UniPoly([3, -1])
        recs += [edge_record(s, "E", "B", UniPoly([0, 6]), -a, a),
                 edge_record(s, "F", "D", UniPoly([0, 6]), -a, a)]
    else:
        quad = UniPoly([0, 2, 1])
        recs += [edge_record(s, "E", "B", quad), edge_record(s, "F", "D", quad)]
    return attach(s, recs, "pruned-octahedron-alt" if alt else "pruned-octahedron")


def _all_edges(s: Surface, beta: UniPoly, name: str) -> G1Surface:
    recs = []
    for i, g in enumerate(s.gluings):
        a0 = edge_slots(s.kind(g.faceA), g.edgeA)[0]
        recs.append(((g.faceA, g.edgeA), a0, EdgeGluing(UniPoly([1]), beta, UniPoly([-1]))))
    return attach(s, recs, name)


def _octahedron() -> G1Surface:
    # vertices N, S and the equator 1234
    faces = ["N12", "N23", "N34", "N41", "S21", "S32", "S43", "S14"]
    return _all_edges(_labeled(faces), UniPoly([0, 2]), "octahedron")


def _cube() -> G1Surface:
    rects = ["0321", "4567", "0154", "1265", "2376", "3047"]
    return _all_edges(_labeled([], rects), UniPoly([-1, 2]), "cube")


def _tetrahedron() -> G1Surface:
    faces = ["ABC", "ADB", "BDC", "CDA"]
    return _all_edges(_labeled(faces), UniPoly([-1, 4]), "tetrahedron")


def _torus() -> G1Surface:
    s = build_surface({
        "polygons": [{"kind": TRIANGLE}, {"kind": TRIANGLE}],
        "gluings": [
            {"faceA": 0, "edgeA": 1, "faceB": 1, "edgeB": 1, "reversed": True},
            {"faceA": 0, "edgeA": 0, "faceB": 1, "edgeB": 0, "reversed": True},
            {"faceA": 0, "edgeA": 2, "faceB": 1, "edgeB": 2, "reversed": True},
        ]})
    places = [[(0, 0), (1, 0), (0, 1)], [(1, 1), (0, 1), (1, 0)]]
    return placement_gluing(s, places, "torus-two-triangles")


def _planar_square() -> G1Surface:
    g = planar_mesh([(0, 0, "slash")])
    return G1Surface(g.surface, g.data, "planar-triangulated-square")


def _pfcontra() -> G1Surface:
    """Four unit squares around a crossing vertex violating the derivative conditions."""
    s = build_surface({
        "polygons": [{"kind": RECTANGLE}] * 4,
        "gluings": [{"faceA": k, "edgeA": 0, "faceB": (k - 1) % 4, "edgeB": 3, "reversed": True}
                    for k in range(4)]})
    recs = []
    for k in range(4):
        if k == 0:
            g = EdgeGluing(UniPoly([2]), UniPoly([0, 1]), UniPoly([-2, 1]))
        else:
            g = EdgeGluing(UniPoly([1]), UniPoly(), UniPoly([-1]))
        recs.append(((k, 0), 0, g))
    return attach(s, recs, "pfcontra")


BUILTINS = {
    "pruned-octahedron": lambda: _pruned_octahedron(False),
    "pruned-octahedron-alt": lambda: _pruned_octahedron(True),
    "octahedron": _octahedron,
    "cube": _cube,
    "tetrahedron": _tetrahedron,
    "torus-two-triangles": _torus,
    "planar-triangulated-square": _planar_square,
    "pfcontra": _pfcontra,
}


def builtin_surface(name: str) -> G1Surface:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise UnknownName(f"unknown built-in surface {name!r}; choose from {sorted(BUILTINS)}") from None
