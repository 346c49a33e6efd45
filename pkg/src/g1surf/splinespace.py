"""Global G1 spline spaces: verification, dimension count and bases.

A spline is one BB form per face at a common degree k.  The basis follows
the usual partition: vertex splines (E1), splines thoroughly vanishing at
both ends of an interior edge (E2), boundary-edge splines (E3) and single
interior control points (E4).  The count is always reconciled with the
brute-force oracle; below the degree threshold the oracle kernel fills any
deficit and the catalog says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import census, edge_slots, is_orientable, topology_report
from .edgespline import (EdgeSpline, completely_separates, edge_space_dim, im_w_dim, is_joining,
                         spline_to_syzygy, syzygy_to_edge_spline, thoroughly_vanishing, w_jets)
from .exactalg import (RECTANGLE, TRIANGLE, BBForm, BiPoly, Jet11, UniPoly, bb_index_count,
                       bb_indices, corner_jet11, frame_position, from_bb, to_bb,
                       to_frame)
from .gluing import G1Surface, VertexReport, classify_vertex
from .linalg import Echelon, nullspace, solve
from .oracle import SplineSystem, dimension_oracle
from .syzygy import edge_delta, mu_basis

__all__ = [
    "Spline", "SplineError", "DegreeMismatch", "DegreeTooLow", "HalfIntegerResult",
    "EdgeSpline", "edge_space_dim", "syzygy_to_edge_spline", "spline_to_syzygy", "w_jets",
    "im_w_dim", "vertex_freedom_dim", "FormulaResult", "dimension_formula", "dimension_oracle",
    "verify_spline", "SplineCheck", "vertex_basis_splines", "edge_basis_splines",
    "face_basis_splines", "assemble_basis", "BasisCatalog", "BasisMember", "realize", "Mesh",
    "lift_edge_spline", "edge_trace",
]


class SplineError(ValueError):
    pass


class DegreeMismatch(SplineError):
    pass


class DegreeTooLow(SplineError):
    pass


class HalfIntegerResult(SplineError):
    pass


# ---------------------------------------------------------------------------
# splines


@dataclass(frozen=True)
class Spline:
    degree: int
    forms: Tuple[BBForm, ...]

    def __post_init__(self):
        for b in self.forms:
            if b.degree != self.degree:
                raise DegreeMismatch(f"face form of degree {b.degree} in a degree {self.degree} spline")

    @classmethod
    def zero(cls, gs: G1Surface, k: int) -> "Spline":
        return cls(k, tuple(BBForm.zero(p.kind, k) for p in gs.surface.polygons))

    @classmethod
    def constant(cls, gs: G1Surface, k: int, c=1) -> "Spline":
        forms = []
        for p in gs.surface.polygons:
            z = BBForm.zero(p.kind, k)
            forms.append(BBForm(p.kind, k, tuple(tuple(Fraction(c) for _ in r) for r in z.coeffs)))
        return cls(k, tuple(forms))

    @classmethod
    def from_vector(cls, gs: G1Surface, k: int, x: Sequence[Fraction]) -> "Spline":
        out, n = [], 0
        for p in gs.surface.polygons:
            m = bb_index_count(p.kind, k)
            vals = iter(x[n:n + m])
            n += m
            rows = [tuple(next(vals) for _ in range(k + 1 - j if p.kind == TRIANGLE else k + 1))
                    for j in range(k + 1)]
            out.append(BBForm(p.kind, k, tuple(rows)))
        return cls(k, tuple(out))

    def vector(self) -> List[Fraction]:
        return [c for b in self.forms for c in b.flat()]

    def __add__(self, o: "Spline") -> "Spline":
        if o.degree != self.degree:
            raise DegreeMismatch("adding splines of different degree")
        return Spline(self.degree, tuple(a + b for a, b in zip(self.forms, o.forms)))

    def scale(self, c) -> "Spline":
        return Spline(self.degree, tuple(b.scale(c) for b in self.forms))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.forms)

    def support(self) -> Tuple[int, ...]:
        return tuple(f for f, b in enumerate(self.forms) if not b.is_zero())


@dataclass(frozen=True)
class EdgeResidual:
    edge: int
    c0: UniPoly
    g1: UniPoly

    @property
    def ok(self) -> bool:
        return self.c0.is_zero() and self.g1.is_zero()


@dataclass(frozen=True)
class SplineCheck:
    ok: bool
    residuals: Tuple[EdgeResidual, ...]

    def failures(self) -> List[EdgeResidual]:
        return [r for r in self.residuals if not r.ok]


def _side_frames(gs: G1Surface, i: int):
    s = gs.surface
    e = s.gluings[i]
    sA, tA = edge_slots(s.kind(e.faceA), e.edgeA)
    return ((e.faceA, sA, tA),
            (e.faceB, s.matched_slot((e.faceA, e.edgeA), sA), s.matched_slot((e.faceA, e.edgeA), tA)))


def edge_trace(gs: G1Surface, sp: Spline, i: int) -> Tuple[BiPoly, BiPoly]:
    """Both face polynomials of edge i in the canonical side frames."""
    (f1, s1, t1), (f2, s2, t2) = _side_frames(gs, i)
    kind = gs.surface.kind
    return (to_frame(from_bb(sp.forms[f1]), kind(f1), s1, t1),
            to_frame(from_bb(sp.forms[f2]), kind(f2), s2, t2))


def verify_spline(gs: G1Surface, sp: Spline) -> SplineCheck:
    if len(sp.forms) != len(gs.surface.polygons):
        raise DegreeMismatch("spline does not have one form per face")
    for b, p in zip(sp.forms, gs.surface.polygons):
        if b.kind != p.kind:
            raise DegreeMismatch(f"{b.kind} form on a {p.kind} face")
    out = []
    for i, g in enumerate(gs.data):
        p1, p2 = edge_trace(gs, sp, i)
        r1, r2 = p1.v_part(0), p2.v_part(0)
        res = g.a * (-p1.v_part(1)) + g.b * r1.derive() + g.c * p2.v_part(1)
        out.append(EdgeResidual(i, r1 - r2, res))
    return SplineCheck(all(r.ok for r in out), tuple(out))


# ---------------------------------------------------------------------------
# counting


def _is_joining_link(gs: G1Surface, i: int, v: int) -> Tuple[bool, ...]:
    """Joining flags of interior edge i at each end lying on vertex v."""
    ends = gs.surface.edge_endpoints(i)
    return tuple(is_joining(gs.data[i], e) for e in (0, 1) if ends[e] == v)


def vertex_freedom_dim(rep: VertexReport) -> int:
    """3 + n - (joining incidences) + (1 at a crossing vertex)."""
    n = rep.valency
    e_perp = sum(1 for j in rep.joining if j)
    return 3 + n - e_perp + (1 if rep.isCrossing else 0)


@dataclass(frozen=True)
class EdgeThreshold:
    edge: int
    d1: int
    d2: int
    delta: int
    threshold: int
    completelySeparates: bool


@dataclass(frozen=True)
class FormulaResult:
    k: int
    value: int
    N0: int
    N0_plus: int
    delta: int
    N1_boundary: int
    N_box: int
    N_tri: int
    threshold: int
    theoremValid: bool
    certified: bool
    genusForm: Optional[int]
    lowerBound: bool
    edges: Tuple[EdgeThreshold, ...] = field(default=(), repr=False)

    @property
    def valid(self) -> bool:
        return self.theoremValid or self.certified

    def caveat(self) -> str:
        if self.valid:
            return "exact"
        if self.lowerBound:
            return "lower bound only, k is below the degree threshold"
        return "no claim (k < 2)"


def dimension_formula(gs: G1Surface, k: int) -> FormulaResult:
    s = gs.surface
    reps = [classify_vertex(gs, v) for v in range(len(s.fans))]
    n0_plus = sum(1 for r in reps if r.isCrossing)
    c = census(s, n0_plus)
    edges = []
    for i, g in enumerate(gs.data):
        m = mu_basis(g)
        thr = max(2 * m.d1 + 3, m.d2 + 4)
        sep = k >= 0 and completely_separates(g, k)
        edges.append(EdgeThreshold(i, m.d1, m.d2, edge_delta(g), thr, sep))
    delta = sum(e.delta for e in edges)
    twice = (2 * (3 * c.N0 + n0_plus - delta) + (2 * k - 5) * c.N1_boundary
             + 2 * (k * k - 2 * k - 1) * c.N_box + (k * k - 3 * k - 1) * c.N_tri)
    if twice % 2:
        raise HalfIntegerResult("triangle and boundary-edge counts have different parity")
    value = twice // 2
    threshold = max((e.threshold for e in edges), default=0)
    theorem = k >= threshold
    certified = k >= 4 and all(e.completelySeparates for e in edges)
    genus_form = None
    if is_orientable(s):
        t = topology_report(s)
        gform2 = (2 * (6 - 6 * t.genus + n0_plus - delta - 3 * t.boundaryComponents)
                  + 2 * (k - 1) * c.N1_boundary + 2 * (k * k - 2 * k + 2) * c.N_box
                  + (k - 1) * (k - 2) * c.N_tri)
        genus_form = gform2 // 2
    return FormulaResult(k, value, c.N0, n0_plus, delta, c.N1_boundary, c.N_box, c.N_tri,
                         threshold, theorem, certified, genus_form, k >= 2, tuple(edges))


# ---------------------------------------------------------------------------
# lifting local pieces


def _frame_bb(p: BiPoly, kind: str, k: int, rows: int = 2) -> Dict[Tuple[int, int], Fraction]:
    """BB coefficients (p along u, q along v) of a frame polynomial, first rows only."""
    b = to_bb(p, kind, k)
    return {(i, j): c for (i, j), c in b.items() if j < rows}


def _place(forms: List[Dict], face: int, kind: str, k: int, s: int, t: int, vals):
    for (p, q), c in vals.items():
        pos = frame_position(kind, k, s, t, p, q)
        forms[face][pos] = c


def _assemble(gs: G1Surface, k: int, entries: List[Dict]) -> Spline:
    out = []
    for f, poly in enumerate(gs.surface.polygons):
        rows = []
        for j in range(k + 1):
            n = k + 1 - j if poly.kind == TRIANGLE else k + 1
            rows.append(tuple(Fraction(entries[f].get((i, j), 0)) for i in range(n)))
        out.append(BBForm(poly.kind, k, tuple(rows)))
    return Spline(k, tuple(out))


def lift_edge_spline(gs: G1Surface, i: int, e: EdgeSpline, k: int) -> Spline:
    """Spline whose first two BB rows on both sides of edge i come from e; zero elsewhere.

    This is a global spline exactly when e thoroughly vanishes at both ends.
    """
    g = gs.data[i]
    if not e.fits(g, k):
        raise DegreeMismatch(f"edge spline does not fit degree {k}")
    entries: List[Dict] = [dict() for _ in gs.surface.polygons]
    for side, (f, s, t) in zip((1, 2), _side_frames(gs, i)):
        kind = gs.surface.kind(f)
        _place(entries, f, kind, k, s, t, _frame_bb(e.side(side), kind, k))
    return _assemble(gs, k, entries)


def face_basis_splines(gs: G1Surface, f: int, k: int) -> List[Spline]:
    """Single interior control points away from the first two rows of every edge."""
    kind = gs.surface.kind(f)
    out = []
    for (i, j) in bb_indices(kind, k):
        if kind == TRIANGLE:
            inner = min(i, j, k - i - j) >= 2
        else:
            inner = 2 <= i <= k - 2 and 2 <= j <= k - 2
        if inner:
            entries = [dict() for _ in gs.surface.polygons]
            entries[f][(i, j)] = Fraction(1)
            out.append(_assemble(gs, k, entries))
    return out


def _boundary_edge_splines(gs: G1Surface, pe, k: int) -> List[Spline]:
    f, e = pe
    kind = gs.surface.kind(f)
    s, t = edge_slots(kind, e)
    out = []
    for q in (0, 1):
        n = k + 1 if (q == 0 or kind == RECTANGLE) else k
        for p in range(2, n - 2):
            entries = [dict() for _ in gs.surface.polygons]
            entries[f][frame_position(kind, k, s, t, p, q)] = Fraction(1)
            out.append(_assemble(gs, k, entries))
    return out


def edge_basis_splines(gs: G1Surface, edge, k: int) -> List[Spline]:
    """E2 splines of an interior edge (index) or E3 splines of a boundary edge (face, edge)."""
    if isinstance(edge, tuple):
        kind = gs.surface.kind(edge[0])
        if k < (3 if kind == RECTANGLE else 4):
            raise DegreeTooLow("boundary edge splines need k >= 3 (rectangle) or 4 (triangle)")
        return _boundary_edge_splines(gs, edge, k)
    g = gs.data[edge]
    if k < 4:
        raise DegreeTooLow("thoroughly vanishing edge splines need k >= 4")
    return [lift_edge_spline(gs, edge, e, k) for e in thoroughly_vanishing(g, k)]


# ---------------------------------------------------------------------------
# vertex splines


def _star(gs: G1Surface, v: int) -> List[int]:
    faces = sorted({st.face for st in gs.surface.fans[v].steps})
    return faces


def _corner_positions(kind: str, k: int, s: int) -> List[Tuple[int, int]]:
    t = (s + 1) % (3 if kind == TRIANGLE else 4)
    return [frame_position(kind, k, s, t, p, q) for p, q in ((0, 0), (1, 0), (0, 1), (1, 1))]


def vertex_jet_coordinates(gs: G1Surface, v: int) -> List[Tuple[int, int]]:
    """(face, slot) corners of vertex v in fan order."""
    return [(st.face, st.slot) for st in gs.surface.fans[v].steps]


def vertex_jets(gs: G1Surface, sp: Spline, v: int) -> List[Jet11]:
    return [corner_jet11(sp.forms[f], slot) for f, slot in vertex_jet_coordinates(gs, v)]


def _local_system(gs: G1Surface, v: int, k: int):
    """Constraints of splines supported on the star of v that vanish thoroughly off v."""
    s = gs.surface
    star = set(_star(gs, v))
    sys = SplineSystem(gs, k)
    rows = []
    pinned = set()
    for f in range(len(s.polygons)):
        off = sys.offsets[f]
        kind = s.kind(f)
        if f not in star:
            pinned.update(off + n for n in range(bb_index_count(kind, k)))
            continue
        # first two rows along every edge of f not incident to v at that face
        corners_at_v = {st.slot for st in s.fans[v].steps if st.face == f}
        n = s.polygons[f].n
        index = {ij: n_ for n_, ij in enumerate(bb_indices(kind, k))}
        for e in range(n):
            a, b = edge_slots(kind, e)
            if a in corners_at_v or b in corners_at_v:
                continue
            for q in (0, 1):
                m = k + 1 if (q == 0 or kind == RECTANGLE) else k
                for p in range(m):
                    pinned.add(off + index[frame_position(kind, k, a, b, p, q)])
        # corners not at v: their J11 block
        for c in range(n):
            if c in corners_at_v:
                continue
            for ij in _corner_positions(kind, k, c):
                pinned.add(off + index[ij])
    for r in sys.rows:
        rows.append(r)
    for c in sorted(pinned):
        rows.append({c: Fraction(1)})
    return sys, rows


def _jet_functionals(gs: G1Surface, sys: SplineSystem, v: int, k: int) -> List[Dict[int, Fraction]]:
    s = gs.surface
    out = []
    for f, slot in vertex_jet_coordinates(gs, v):
        kind = s.kind(f)
        index = {ij: n for n, ij in enumerate(bb_indices(kind, k))}
        off = sys.offsets[f]
        c0, c1, c2, c3 = (off + index[ij] for ij in _corner_positions(kind, k, slot))
        mixed = k * (k - 1) if kind == TRIANGLE else k * k
        out.append({c0: Fraction(1)})
        out.append({c1: Fraction(k), c0: Fraction(-k)})
        out.append({c2: Fraction(k), c0: Fraction(-k)})
        d = {}
        for c, sgn in ((c3, 1), (c2, -1), (c1, -1), (c0, 1)):
            d[c] = d.get(c, 0) + sgn * mixed
        out.append({c: x for c, x in d.items() if x})
    return out


def vertex_spline_from_jets(gs: G1Surface, v: int, k: int, jets: Sequence[Sequence]) -> Spline:
    """The spline on the star of v with the given corner jets (fan order), or DegreeTooLow."""
    sys, rows = _local_system(gs, v, k)
    funcs = _jet_functionals(gs, sys, v, k)
    flat = [Fraction(x) for j in jets for x in j]
    x = solve(rows + funcs, [Fraction(0)] * len(rows) + flat, sys.ncols)
    if x is None:
        raise DegreeTooLow(f"prescribed jets at vertex {v} are not realizable at degree {k}")
    return Spline.from_vector(gs, k, x)


def vertex_basis_splines(gs: G1Surface, v: int, k: int, strict: bool = True) -> List[Spline]:
    """Independent vertex splines realizing the jet freedom at v.

    The jet basis is the reduced row echelon basis of the realizable jets in
    fan order (value, d/du, d/dv, mixed per corner); every spline is the
    solution with free BB coefficients set to zero.
    """
    sys, rows = _local_system(gs, v, k)
    funcs = _jet_functionals(gs, sys, v, k)
    K = nullspace(rows, sys.ncols)
    # jet image of the local kernel
    img = []
    for x in K:
        img.append({n: sum((c * x[col] for col, c in f.items()), Fraction(0)) for n, f in enumerate(funcs)})
    ech = Echelon()
    for r in img:
        ech.add({n: c for n, c in r.items() if c})
    want = vertex_freedom_dim(classify_vertex(gs, v))
    if strict and ech.rank < want:
        raise DegreeTooLow(f"vertex {v}: {ech.rank} of {want} jet freedoms realizable at degree {k}")
    out = []
    red = ech.reduced()
    for p in sorted(red):
        jet = red[p]
        target = [jet.get(n, Fraction(0)) for n in range(len(funcs))]
        x = solve(rows + funcs, [Fraction(0)] * len(rows) + target, sys.ncols)
        out.append(Spline.from_vector(gs, k, x))
    return out


# ---------------------------------------------------------------------------
# basis catalog


@dataclass(frozen=True)
class BasisMember:
    tag: str          # E1 .. E4, or "oracle" for supplements below threshold
    source: str
    spline: Spline


@dataclass(frozen=True)
class BasisCatalog:
    degree: int
    members: Tuple[BasisMember, ...]
    oracleDimension: int
    deficits: Dict[str, int]

    def count(self, tag: str) -> int:
        return sum(1 for m in self.members if m.tag == tag)

    def __len__(self):
        return len(self.members)

    @property
    def complete(self) -> bool:
        return len(self.members) == self.oracleDimension


def assemble_basis(gs: G1Surface, k: int) -> BasisCatalog:
    s = gs.surface
    cand: List[BasisMember] = []
    for v in range(len(s.fans)):
        for sp in vertex_basis_splines(gs, v, k, strict=False):
            cand.append(BasisMember("E1", f"vertex {s.orbit_label(v)}", sp))
    if k >= 4:
        for i in range(len(s.gluings)):
            for sp in edge_basis_splines(gs, i, k):
                cand.append(BasisMember("E2", f"edge {i}", sp))
    for pe in s.boundary_edges:
        kind = s.kind(pe[0])
        if k >= (3 if kind == RECTANGLE else 4):
            for sp in edge_basis_splines(gs, tuple(pe), k):
                cand.append(BasisMember("E3", f"boundary {pe}", sp))
    for f in range(len(s.polygons)):
        for sp in face_basis_splines(gs, f, k):
            cand.append(BasisMember("E4", f"face {f}", sp))
    members = []
    ech = Echelon()
    dropped = 0
    for m in cand:
        vec = {n: c for n, c in enumerate(m.spline.vector()) if c}
        if ech.add(vec):
            members.append(m)
        else:
            dropped += 1
    oracle = SplineSystem(gs, k)
    dim = oracle.nullity()
    deficit = dim - len(members)
    if deficit > 0:
        for x in oracle.kernel():
            vec = {n: c for n, c in enumerate(x) if c}
            if ech.add(vec):
                members.append(BasisMember("oracle", "oracle kernel", Spline.from_vector(gs, k, x)))
    deficits = {"supplemented": max(deficit, 0), "dependent": dropped}
    return BasisCatalog(k, tuple(members), dim, deficits)


# ---------------------------------------------------------------------------
# realization


@dataclass(frozen=True)
class Mesh:
    vertices: Tuple[Tuple[float, float, float], ...]
    faces: Tuple[Tuple[int, ...], ...]
    groups: Tuple[Tuple[str, int, int], ...]   # (name, first face, face count)

    def to_obj(self) -> str:
        lines = ["# g1surf mesh"]
        for x, y, z in self.vertices:
            lines.append(f"v {x:.12g} {y:.12g} {z:.12g}")
        for name, lo, n in self.groups:
            lines.append(f"o {name}")
            for f in self.faces[lo:lo + n]:
                lines.append("f " + " ".join(str(i + 1) for i in f))
        return "\n".join(lines) + "\n"

    def euler_characteristic(self, tol: float = 1e-9) -> int:
        """chi of the mesh after welding coincident vertices."""
        key = {}
        ids = []
        for p in self.vertices:
            kk = tuple(round(c / tol) for c in p)
            ids.append(key.setdefault(kk, len(key)))
        E = set()
        F = 0
        for f in self.faces:
            w = [ids[i] for i in f]
            if len(set(w)) < 3:
                continue
            F += 1
            for a, b in zip(w, w[1:] + w[:1]):
                E.add((min(a, b), max(a, b)))
        return len(key) - len(E) + F


def realize(gs: G1Surface, sx: Spline, sy: Spline, sz: Spline, n: int = 8) -> Mesh:
    if not (sx.degree == sy.degree == sz.degree):
        raise DegreeMismatch("coordinate splines must share one degree")
    verts: List[Tuple[float, float, float]] = []
    faces: List[Tuple[int, ...]] = []
    groups = []
    polys = [[from_bb(s.forms[f]) for s in (sx, sy, sz)] for f in range(len(gs.surface.polygons))]
    for f, poly in enumerate(gs.surface.polygons):
        first = len(faces)
        idx = {}
        for j in range(n + 1):
            for i in range(n + 1 - j if poly.kind == TRIANGLE else n + 1):
                x, y = i / n, j / n
                idx[(i, j)] = len(verts)
                verts.append(tuple(p.eval_float(x, y) for p in polys[f]))
        for j in range(n):
            for i in range(n - j if poly.kind == TRIANGLE else n):
                a, b, d = idx[(i, j)], idx[(i + 1, j)], idx[(i, j + 1)]
                if poly.kind == TRIANGLE:
                    faces.append((a, b, d))
                    if (i + 1, j + 1) in idx:
                        faces.append((b, idx[(i + 1, j + 1)], d))
                else:
                    faces.append((a, b, idx[(i + 1, j + 1)], d))
        groups.append((f"face{f}", first, len(faces) - first))
    return Mesh(tuple(verts), tuple(faces), tuple(groups))
