import random

import pytest
from hypothesis import given, settings

from g1surf.builder import BUILTINS, random_planar_mesh
from g1surf.complex import (ComplexError, Disconnected, EdgeReuse, Polygon, build_surface, census,
                            edge_slots, topology_report)

from strategies import planar_meshes


def _labelled_counts(s):
    """(V, E, F) straight from the vertex labels, as an independent count."""
    V = {l for p in s.polygons for l in p.labels}
    E = {frozenset((p.labels[a], p.labels[b])) for p in s.polygons
         for a, b in (edge_slots(p.kind, e) for e in range(p.n))}
    return len(V), len(E), len(s.polygons)


@pytest.mark.parametrize("name,genus", [("octahedron", 0), ("cube", 0), ("tetrahedron", 0),
                                        ("pruned-octahedron", 0), ("torus-two-triangles", 1)])
def test_closed_builtins(surface, name, genus):
    s = surface(name).surface
    top = topology_report(s)
    assert top.orientable and top.boundaryComponents == 0
    assert top.genus == genus
    if all(p.labels for p in s.polygons) and name != "torus-two-triangles":
        V, E, F = _labelled_counts(s)
        assert top.eulerCharacteristic == V - E + F == 2
        assert len(s.fans) == V and len(s.gluings) == E


def test_pruned_octahedron_census(surface):
    s = surface("pruned-octahedron").surface
    c = census(s)
    assert (c.N_tri, c.N_box, c.N0, c.N1, c.N1_boundary) == (6, 1, 6, 11, 0)
    assert c.identity_holds()
    valency = {s.orbit_label(v): s.fans[v].valency for v in range(len(s.fans))}
    assert valency == {"A": 4, "C": 4, "B": 3, "D": 3, "E": 4, "F": 4}


def test_torus_has_one_vertex(surface):
    s = surface("torus-two-triangles").surface
    assert len(s.fans) == 1 and s.fans[0].valency == 6
    assert topology_report(s).eulerCharacteristic == 0


def test_boundary_surface(surface):
    s = surface("planar-triangulated-square").surface
    top = topology_report(s)
    assert top.boundaryComponents == 1 and top.eulerCharacteristic == 2


@settings(max_examples=200, deadline=None)
@given(planar_meshes())
def test_planar_meshes_cap_to_spheres(gs):
    s = gs.surface
    top = topology_report(s)
    c = census(s)
    assert c.identity_holds()
    # every boundary loop is capped by a disc, so a planar patch caps to a sphere
    assert top.orientable and top.boundaryComponents >= 1
    assert top.eulerCharacteristic == 2 and top.genus == 0


def test_inferred_and_explicit_gluings_agree():
    spec = {"polygons": [{"kind": "triangle", "vertices": list("ABC")},
                         {"kind": "triangle", "vertices": list("CBD")}]}
    s = build_surface(spec)
    assert len(s.gluings) == 1 and len(s.boundary_edges) == 4
    again = build_surface(s.spec())
    assert again == s


def test_errors():
    with pytest.raises(ComplexError):
        Polygon("pentagon")
    with pytest.raises(ComplexError):
        Polygon("triangle", ("A", "B"))
    tri = {"kind": "triangle", "vertices": list("ABC")}
    with pytest.raises(EdgeReuse):
        build_surface({"polygons": [tri, tri, tri]})
    with pytest.raises(Disconnected):
        build_surface({"polygons": [tri, {"kind": "triangle", "vertices": list("DEF")}]})


def test_all_builtins_build():
    for name, make in BUILTINS.items():
        assert census(make().surface).identity_holds(), name


def test_random_mesh_face_counts():
    for seed in range(20):
        gs = random_planar_mesh(random.Random(seed), 2, 8)
        assert 2 <= len(gs.surface.polygons) <= 8
