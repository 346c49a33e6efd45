"""Brute-force dimension oracle for spline spaces.

Unknowns are all Bernstein-Bezier coefficients of all faces at degree k.  Each
interior edge contributes the C0 matching of the two restrictions and the
coefficients of a A + b B + c C; the spline space is the exact kernel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .complex import edge_slots
from .exactalg import BBForm, UniPoly, bb_index_count, bb_indices, bernstein_basis, to_frame
from .gluing import G1Surface
from .linalg import Echelon, Row, nullspace


@lru_cache(maxsize=None)
def edge_traces(kind: str, k: int, s: int, t: int) -> Tuple[Tuple[int, UniPoly, UniPoly], ...]:
    """(basis position, restriction, transversal derivative) in the frame (s, t).

    Only basis functions with a nonzero trace are listed.
    """
    out = []
    for pos, (i, j) in enumerate(bb_indices(kind, k)):
        p = to_frame(bernstein_basis(kind, k, i, j), kind, s, t)
        r0, r1 = p.v_part(0), p.v_part(1)
        if not (r0.is_zero() and r1.is_zero()):
            out.append((pos, r0, r1))
    return tuple(out)


class SplineSystem:
    """Linear constraints of S^1_k on a glued surface."""

    def __init__(self, gs: G1Surface, k: int):
        self.gs = gs
        self.k = k
        s = gs.surface
        self.offsets: List[int] = []
        n = 0
        for p in s.polygons:
            self.offsets.append(n)
            n += bb_index_count(p.kind, k)
        self.ncols = n
        self.rows: List[Row] = []
        self.edge_rows: List[Tuple[int, int]] = []
        for i in range(len(s.gluings)):
            lo = len(self.rows)
            self.rows.extend(self.edge_constraints(i))
            self.edge_rows.append((lo, len(self.rows)))

    def side_frames(self, i: int):
        s = self.gs.surface
        e = s.gluings[i]
        sA, tA = edge_slots(s.kind(e.faceA), e.edgeA)
        sB = s.matched_slot((e.faceA, e.edgeA), sA)
        tB = s.matched_slot((e.faceA, e.edgeA), tA)
        return (e.faceA, sA, tA), (e.faceB, sB, tB)

    def traces(self, face: int, s: int, t: int):
        """Restriction and transversal derivative as {power: Row} maps."""
        kind = self.gs.surface.kind(face)
        off = self.offsets[face]
        rest: Dict[int, Row] = {}
        dv: Dict[int, Row] = {}
        for pos, r0, r1 in edge_traces(kind, self.k, s, t):
            for d, c in enumerate(r0.coeffs):
                if c:
                    rest.setdefault(d, {})[off + pos] = c
            for d, c in enumerate(r1.coeffs):
                if c:
                    dv.setdefault(d, {})[off + pos] = c
        return rest, dv

    def edge_constraints(self, i: int) -> List[Row]:
        g = self.gs.data[i]
        (f1, s1, t1), (f2, s2, t2) = self.side_frames(i)
        r1, d1 = self.traces(f1, s1, t1)
        r2, d2 = self.traces(f2, s2, t2)
        rows = []
        for d in range(self.k + 1):
            row = dict(r1.get(d, {}))
            for c, v in r2.get(d, {}).items():
                row[c] = row.get(c, 0) - v
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
        # a*(-dv1) + b*(d/du restriction1) + c*dv2
        du: Dict[int, Row] = {}
        for d, row in r1.items():
            if d:
                du[d - 1] = {c: v * d for c, v in row.items()}
        acc: Dict[int, Row] = {}

        def add(poly: UniPoly, src: Dict[int, Row], sign: int):
            for p, pc in enumerate(poly.coeffs):
                if not pc:
                    continue
                for d, row in src.items():
                    tgt = acc.setdefault(p + d, {})
                    for c, v in row.items():
                        nv = tgt.get(c, 0) + sign * pc * v
                        if nv:
                            tgt[c] = nv
                        else:
                            tgt.pop(c, None)

        add(g.a, d1, -1)
        add(g.b, du, 1)
        add(g.c, d2, 1)
        rows.extend(r for _, r in sorted(acc.items()) if r)
        return rows

    def kernel(self) -> List[List[Fraction]]:
        return nullspace(self.rows, self.ncols)

    def nullity(self) -> int:
        e = Echelon()
        for r in self.rows:
            e.add(r)
        return self.ncols - e.rank

    def vector_to_forms(self, x: Sequence[Fraction]) -> List[BBForm]:
        s = self.gs.surface
        out = []
        for f, p in enumerate(s.polygons):
            off = self.offsets[f]
            vals = list(x[off: off + bb_index_count(p.kind, self.k)])
            rows = []
            it = iter(vals)
            for j in range(self.k + 1):
                n = self.k + 1 - j if p.kind == "triangle" else self.k + 1
                rows.append(tuple(next(it) for _ in range(n)))
            out.append(BBForm(p.kind, self.k, tuple(rows)))
        return out

    def forms_to_vector(self, forms: Sequence[BBForm]) -> List[Fraction]:
        x = []
        for b in forms:
            x.extend(b.flat())
        return x


def dimension_oracle(gs: G1Surface, k: int) -> int:
    return SplineSystem(gs, k).nullity()
