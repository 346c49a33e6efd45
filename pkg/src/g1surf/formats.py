"""JSON documents for surfaces, splines and basis catalogs.

Rationals are written as "p/q" strings (integers without a denominator) so
files round-trip exactly.  Output is deterministic: fixed key order, no
timestamps.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

from .complex import ComplexError, build_surface, edge_slots
from .exactalg import RECTANGLE, TRIANGLE, BBForm, UniPoly, fmt_rat, rat
from .gluing import EdgeGluing, G1Surface, GluingError, canonical_from_declared
from .splinespace import BasisCatalog, Spline

SURFACE_FORMAT = "g1surf-surface"
SPLINE_FORMAT = "g1surf-spline"
CATALOG_FORMAT = "g1surf-basis"
VERSION = 1


class ParseError(ValueError):
    """Malformed document: bad JSON, missing fields or non-rational entries."""


class ValidationFailed(ValueError):
    """A well-formed document that does not describe a valid object."""


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _loads(text: str) -> Dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


def _rat(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected a rational string, got {x!r}")
    try:
        return rat(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {x!r}") from None


def _poly(xs) -> UniPoly:
    if not isinstance(xs, list):
        raise ParseError(f"expected a coefficient list, got {xs!r}")
    return UniPoly([_rat(x) for x in xs])


def _field(doc: Dict[str, Any], key: str, kind=None):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"field {key!r} has the wrong type")
    return v


def _check_header(doc, fmt: str):
    if doc.get("format") != fmt:
        raise ParseError(f"expected format {fmt!r}, got {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")


# ---------------------------------------------------------------------------
# surfaces


def surface_to_doc(gs: G1Surface) -> Dict[str, Any]:
    s = gs.surface
    spec = s.spec()
    data = []
    for e, g in zip(s.gluings, gs.data):
        data.append({
            "face": e.faceA, "edge": e.edgeA, "u0": edge_slots(s.kind(e.faceA), e.edgeA)[0],
            "a": [fmt_rat(c) for c in g.a.coeffs],
            "b": [fmt_rat(c) for c in g.b.coeffs],
            "c": [fmt_rat(c) for c in g.c.coeffs],
        })
    return {"format": SURFACE_FORMAT, "version": VERSION, "name": gs.name,
            "polygons": spec["polygons"], "gluings": spec["gluings"], "gluingData": data}


def surface_from_doc(doc: Dict[str, Any]) -> G1Surface:
    _check_header(doc, SURFACE_FORMAT)
    polys = _field(doc, "polygons", list)
    glus = _field(doc, "gluings", list)
    recs = _field(doc, "gluingData", list)
    for p in polys:
        if not isinstance(p, dict) or "kind" not in p:
            raise ParseError("each polygon needs a kind")
    for g in glus:
        if not isinstance(g, dict) or not all(k in g for k in ("faceA", "edgeA", "faceB", "edgeB")):
            raise ParseError("each gluing needs faceA, edgeA, faceB, edgeB")
    try:
        s = build_surface({"polygons": polys, "gluings": glus})
    except (ComplexError, IndexError, TypeError, ValueError) as exc:
        raise ValidationFailed(f"invalid complex: {exc}") from None
    out: Dict[int, EdgeGluing] = {}
    for r in recs:
        if not isinstance(r, dict):
            raise ParseError("gluing records must be objects")
        face, edge, u0 = (_field(r, k, int) for k in ("face", "edge", "u0"))
        a, b, c = (_poly(_field(r, k)) for k in ("a", "b", "c"))
        try:
            i = s.edge_index((face, edge))
            e = s.gluings[i]
            canonical = (face, edge) == (e.faceA, e.edgeA) and u0 == edge_slots(s.kind(face), edge)[0]
            if canonical:
                flags = (int(s.kind(e.faceA) == RECTANGLE), int(s.kind(e.faceB) == RECTANGLE))
                g = EdgeGluing(a, b, c, *flags)
            else:
                i, g = canonical_from_declared(s, (face, edge), u0, EdgeGluing(a, b, c))
        except (GluingError, KeyError, IndexError, ComplexError) as exc:
            raise ValidationFailed(f"bad gluing record {r!r}: {exc}") from None
        if i in out:
            raise ValidationFailed(f"edge {i} has two gluing records")
        out[i] = g
    missing = [i for i in range(len(s.gluings)) if i not in out]
    if missing:
        raise ValidationFailed(f"no gluing data for interior edges {missing}")
    return G1Surface(s, tuple(out[i] for i in range(len(s.gluings))), str(doc.get("name", "")))


def dump_surface(gs: G1Surface) -> str:
    return dumps(surface_to_doc(gs))


def load_surface(text: str) -> G1Surface:
    return surface_from_doc(_loads(text))


# ---------------------------------------------------------------------------
# splines


def spline_to_doc(sp: Spline) -> Dict[str, Any]:
    faces = [{"kind": f.kind, "coeffs": [[fmt_rat(c) for c in row] for row in f.coeffs]}
             for f in sp.forms]
    return {"format": SPLINE_FORMAT, "version": VERSION, "degree": sp.degree, "faces": faces}


def spline_from_doc(doc: Dict[str, Any], gs: G1Surface | None = None) -> Spline:
    _check_header(doc, SPLINE_FORMAT)
    k = _field(doc, "degree", int)
    faces = _field(doc, "faces", list)
    forms = []
    for f in faces:
        if not isinstance(f, dict):
            raise ParseError("faces must be objects")
        kind = _field(f, "kind", str)
        rows = _field(f, "coeffs", list)
        if kind not in (TRIANGLE, RECTANGLE) or not all(isinstance(r, list) for r in rows):
            raise ParseError(f"bad face record of kind {kind!r}")
        try:
            forms.append(BBForm(kind, k, tuple(tuple(_rat(c) for c in r) for r in rows)))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ValidationFailed(f"BB array shape: {exc}") from None
    if gs is not None:
        kinds = [gs.surface.kind(i) for i in range(len(gs.surface.polygons))]
        if [f.kind for f in forms] != kinds:
            raise ValidationFailed("spline faces do not match the surface polygons")
    return Spline(k, tuple(forms))


def dump_spline(sp: Spline) -> str:
    return dumps(spline_to_doc(sp))


def load_spline(text: str, gs: G1Surface | None = None) -> Spline:
    return spline_from_doc(_loads(text), gs)


# ---------------------------------------------------------------------------
# basis catalogs


def write_catalog(cat: BasisCatalog, out: Path) -> Path:
    """Write one spline file per member plus manifest.json into directory out."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(cat.members))))
    members: List[Dict[str, Any]] = []
    for n, m in enumerate(cat.members):
        name = f"spline_{n:0{width}d}.json"
        (out / name).write_text(dump_spline(m.spline))
        members.append({"file": name, "tag": m.tag, "source": str(m.source)})
    manifest = {"format": CATALOG_FORMAT, "version": VERSION, "degree": cat.degree,
                "dimension": len(cat.members), "oracleDimension": cat.oracleDimension,
                "counts": {t: cat.count(t) for t in ("E1", "E2", "E3", "E4", "oracle")},
                "deficits": {str(k): v for k, v in sorted(cat.deficits.items())},
                "members": members}
    path = out / "manifest.json"
    path.write_text(dumps(manifest))
    return path
