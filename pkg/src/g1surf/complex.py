"""Combinatorial G0 polygonal surfaces.

A surface is a list of polygons (triangles and rectangles in their standard
slot order) together with pairwise identifications of polygon edges.  Every
identification is affine; the ``reversed`` flag says whether the start slot of
the first edge is matched with the end slot of the second (the usual
orientation-compatible case) or with its start slot.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exactalg import KINDS, RECTANGLE, TRIANGLE, n_slots

Corner = Tuple[int, int]  # (face, slot)
PEdge = Tuple[int, int]  # (face, local edge)


class ComplexError(ValueError):
    """Base class for malformed surface descriptions."""


class EdgeReuse(ComplexError):
    pass


class SelfGlue(ComplexError):
    pass


class Disconnected(ComplexError):
    pass


@dataclass(frozen=True)
class Polygon:
    kind: str
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ComplexError(f"unknown polygon kind {self.kind!r}")
        if self.labels is not None and len(self.labels) != n_slots(self.kind):
            raise ComplexError(f"a {self.kind} needs {n_slots(self.kind)} vertex labels")

    @property
    def n(self) -> int:
        return n_slots(self.kind)


@dataclass(frozen=True)
class EdgePair:
    faceA: int
    edgeA: int
    faceB: int
    edgeB: int
    reversed: bool = True

    def sides(self) -> Tuple[PEdge, PEdge]:
        return (self.faceA, self.edgeA), (self.faceB, self.edgeB)


@dataclass(frozen=True)
class FanStep:
    """One corner of a vertex fan: the face, the slot, and the local edges
    through which the walk enters and leaves the corner.

    Closed fans are walked so that the entry edge of a corner is the one
    leaving its slot counterclockwise; the corner frame has u along the entry
    edge and v along the exit edge.
    """

    face: int
    slot: int
    entry: int
    exit: int


@dataclass(frozen=True)
class Fan:
    steps: Tuple[FanStep, ...]
    closed: bool

    @property
    def valency(self) -> int:
        """Number of polygons around the vertex."""
        return len(self.steps)


@dataclass(frozen=True)
class SurfaceCensus:
    N_box: int
    N_tri: int
    N0: int
    N1: int
    N1_boundary: int
    N0_plus: Optional[int] = None

    def identity_holds(self) -> bool:
        return 2 * self.N1 == 4 * self.N_box + 3 * self.N_tri + self.N1_boundary


@dataclass(frozen=True)
class TopologyReport:
    eulerCharacteristic: int
    orientable: bool
    genus: Optional[int]
    boundaryComponents: int


def edge_slots(kind: str, e: int) -> Tuple[int, int]:
    return e, (e + 1) % n_slots(kind)


class Surface:
    """Immutable combinatorial surface with precomputed vertex fans."""

    def __init__(self, polygons: Sequence[Polygon], gluings: Sequence[EdgePair]):
        self.polygons: Tuple[Polygon, ...] = tuple(polygons)
        canon = []
        partner: Dict[PEdge, Tuple[PEdge, bool]] = {}
        for g in gluings:
            for f, e in g.sides():
                if not 0 <= f < len(self.polygons):
                    raise ComplexError(f"gluing refers to missing face {f}")
                if not 0 <= e < self.polygons[f].n:
                    raise ComplexError(f"face {f} has no edge {e}")
            a, b = g.sides()
            if a == b:
                raise SelfGlue(f"edge {a} glued to itself")
            for x in (a, b):
                if x in partner:
                    raise EdgeReuse(f"edge {x} appears in two gluings")
            partner[a] = (b, g.reversed)
            partner[b] = (a, g.reversed)
            if b < a:
                a, b = b, a
            canon.append(EdgePair(a[0], a[1], b[0], b[1], g.reversed))
        self.gluings: Tuple[EdgePair, ...] = tuple(canon)
        self._partner = partner
        self.boundary_edges: Tuple[PEdge, ...] = tuple(
            (f, e) for f, p in enumerate(self.polygons) for e in range(p.n) if (f, e) not in partner)
        self._check_connected()
        self._build_orbits()

    # --- basic structure
    def kind(self, f: int) -> str:
        return self.polygons[f].kind

    def partner(self, pe: PEdge) -> Optional[Tuple[PEdge, bool]]:
        return self._partner.get(pe)

    def is_boundary_edge(self, pe: PEdge) -> bool:
        return pe not in self._partner

    def edge_index(self, pe: PEdge) -> int:
        """Index of the interior edge containing the polygon edge pe."""
        return self._edge_of[pe]

    def matched_slot(self, pe: PEdge, slot: int) -> int:
        """Slot of the partner face identified with ``slot`` of edge pe."""
        (g, d), rev = self._partner[pe]
        f, e = pe
        s0, s1 = edge_slots(self.kind(f), e)
        t0, t1 = edge_slots(self.kind(g), d)
        if slot == s0:
            return t1 if rev else t0
        if slot == s1:
            return t0 if rev else t1
        raise ComplexError(f"slot {slot} is not on edge {pe}")

    def _check_connected(self):
        n = len(self.polygons)
        if n == 0:
            raise Disconnected("surface has no polygons")
        seen = {0}
        todo = [0]
        while todo:
            f = todo.pop()
            for e in range(self.polygons[f].n):
                p = self._partner.get((f, e))
                if p and p[0][0] not in seen:
                    seen.add(p[0][0])
                    todo.append(p[0][0])
        if len(seen) != n:
            raise Disconnected(f"faces {sorted(set(range(n)) - seen)} are not reachable")

    def _build_orbits(self):
        self._edge_of = {}
        for i, g in enumerate(self.gluings):
            a, b = g.sides()
            self._edge_of[a] = i
            self._edge_of[b] = i
        corners = [(f, s) for f, p in enumerate(self.polygons) for s in range(p.n)]
        done = set()
        fans: List[Fan] = []
        # boundary fans first, so every chain starts at a boundary edge
        for f, s in corners:
            if (f, s) in done:
                continue
            kind = self.kind(f)
            n = n_slots(kind)
            for entry in (s, (s - 1) % n):
                if (f, entry) in self._partner:
                    continue
                exit_ = (s - 1) % n if entry == s else s
                fans.append(self._walk(f, s, entry, exit_, done))
                break
        for f, s in corners:
            if (f, s) in done:
                continue
            n = self.polygons[f].n
            fans.append(self._walk(f, s, s, (s - 1) % n, done))
        fans.sort(key=lambda fan: min((st.face, st.slot) for st in fan.steps))
        self.fans: Tuple[Fan, ...] = tuple(fans)
        self.orbit_of: Dict[Corner, int] = {}
        for i, fan in enumerate(self.fans):
            for st in fan.steps:
                self.orbit_of[(st.face, st.slot)] = i

    def _walk(self, f, s, entry, exit_, done) -> Fan:
        steps = []
        start = (f, s, entry)
        while True:
            steps.append(FanStep(f, s, entry, exit_))
            done.add((f, s))
            p = self._partner.get((f, exit_))
            if p is None:
                return Fan(tuple(steps), False)
            (g, d), _ = p
            s2 = self.matched_slot((f, exit_), s)
            n = self.polygons[g].n
            e2 = d
            x2 = s2 if d == (s2 - 1) % n else (s2 - 1) % n
            f, s, entry, exit_ = g, s2, e2, x2
            if (f, s, entry) == start:
                return Fan(tuple(steps), True)
            if (f, s) in done:
                raise ComplexError("inconsistent vertex fan")

    # --- derived data
    @property
    def orbits(self) -> List[Tuple[Corner, ...]]:
        return [tuple((st.face, st.slot) for st in fan.steps) for fan in self.fans]

    def orbit_label(self, i: int) -> str:
        labels = set()
        for st in self.fans[i].steps:
            lab = self.polygons[st.face].labels
            if lab is not None:
                labels.add(lab[st.slot])
        return labels.pop() if len(labels) == 1 else f"v{i}"

    def orbit_for_label(self, label: str) -> int:
        for i in range(len(self.fans)):
            if self.orbit_label(i) == label:
                return i
        raise KeyError(label)

    def is_boundary_vertex(self, i: int) -> bool:
        return not self.fans[i].closed

    def edge_endpoints(self, i: int) -> Tuple[int, int]:
        """Vertex orbits at the start and end of interior edge i (canonical frame)."""
        g = self.gluings[i]
        s0, s1 = edge_slots(self.kind(g.faceA), g.edgeA)
        return self.orbit_of[(g.faceA, s0)], self.orbit_of[(g.faceA, s1)]

    def interior_edge_by_labels(self, x: str, y: str) -> int:
        for i in range(len(self.gluings)):
            a, b = self.edge_endpoints(i)
            if {self.orbit_label(a), self.orbit_label(b)} == {x, y}:
                return i
        raise KeyError((x, y))

    def spec(self) -> dict:
        return {
            "polygons": [{"kind": p.kind, **({"vertices": list(p.labels)} if p.labels else {})}
                         for p in self.polygons],
            "gluings": [{"faceA": g.faceA, "edgeA": g.edgeA, "faceB": g.faceB,
                         "edgeB": g.edgeB, "reversed": g.reversed} for g in self.gluings],
        }

    def __eq__(self, other):
        return isinstance(other, Surface) and self.polygons == other.polygons and self.gluings == other.gluings

    def __hash__(self):
        return hash((self.polygons, self.gluings))


def _infer_gluings(polygons: Sequence[Polygon]) -> List[EdgePair]:
    seen: Dict[frozenset, Tuple[int, int, Tuple[str, str]]] = {}
    out = []
    for f, p in enumerate(polygons):
        if p.labels is None:
            continue
        for e in range(p.n):
            s0, s1 = edge_slots(p.kind, e)
            ends = (p.labels[s0], p.labels[s1])
            key = frozenset(ends)
            if len(key) == 1:
                raise ComplexError("cannot infer a gluing for an edge with equal end labels")
            if key in seen:
                g, d, other = seen.pop(key)
                if other is None:
                    raise EdgeReuse(f"edge {sorted(key)} appears more than twice")
                out.append(EdgePair(g, d, f, e, reversed=(other == (ends[1], ends[0]))))
                seen[key] = (f, e, None)  # tombstone
            else:
                seen[key] = (f, e, ends)
    return out


def build_surface(spec) -> Surface:
    """Build a surface from a mapping with ``polygons`` and optional ``gluings``.

    Polygons are ``{"kind": ..., "vertices": [labels]}``.  When ``gluings`` is
    absent it is inferred from shared vertex labels.
    """
    polys = []
    for p in spec["polygons"]:
        if isinstance(p, Polygon):
            polys.append(p)
            continue
        labels = p.get("vertices")
        polys.append(Polygon(p["kind"], tuple(str(x) for x in labels) if labels is not None else None))
    if spec.get("gluings") is None:
        gluings = _infer_gluings(polys)
    else:
        gluings = []
        for g in spec["gluings"]:
            if isinstance(g, EdgePair):
                gluings.append(g)
            else:
                gluings.append(EdgePair(int(g["faceA"]), int(g["edgeA"]), int(g["faceB"]),
                                        int(g["edgeB"]), bool(g.get("reversed", True))))
    return Surface(polys, gluings)


def census(s: Surface, n0_plus: Optional[int] = None) -> SurfaceCensus:
    nb = sum(1 for p in s.polygons if p.kind == RECTANGLE)
    nt = sum(1 for p in s.polygons if p.kind == TRIANGLE)
    out = SurfaceCensus(nb, nt, len(s.fans), len(s.gluings) + len(s.boundary_edges),
                        len(s.boundary_edges), n0_plus)
    assert out.identity_holds()
    return out


def boundary_components(s: Surface) -> int:
    parent = {pe: pe for pe in s.boundary_edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_orbit: Dict[int, PEdge] = {}
    for f, e in s.boundary_edges:
        for slot in edge_slots(s.kind(f), e):
            o = s.orbit_of[(f, slot)]
            if o in by_orbit:
                parent[find((f, e))] = find(by_orbit[o])
            else:
                by_orbit[o] = (f, e)
    return len({find(x) for x in s.boundary_edges})


def is_orientable(s: Surface) -> bool:
    orient = {0: 1}
    todo = deque([0])
    while todo:
        f = todo.popleft()
        for e in range(s.polygons[f].n):
            p = s.partner((f, e))
            if p is None:
                continue
            (g, _), rev = p
            want = orient[f] if rev else -orient[f]
            if g in orient:
                if orient[g] != want:
                    return False
            else:
                orient[g] = want
                todo.append(g)
    return True


def topology_report(s: Surface) -> TopologyReport:
    c = census(s)
    bc = boundary_components(s)
    chi = c.N0 - c.N1 + c.N_box + c.N_tri + bc  # boundary components capped by discs
    orientable = is_orientable(s)
    genus = (2 - chi) // 2 if orientable else None
    return TopologyReport(chi, orientable, genus, bc)
