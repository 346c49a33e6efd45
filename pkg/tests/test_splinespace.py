import json
from fractions import Fraction

import pytest

from g1surf.figures import _vertex_index, corner_pattern_jets, cross_pattern, vertex_figure_spline
from g1surf.linalg import rank
from g1surf.oracle import SplineSystem, dimension_oracle
from g1surf.splinespace import (DegreeMismatch, DegreeTooLow, Spline, assemble_basis,
                                dimension_formula, realize, vertex_basis_splines, vertex_jets,
                                verify_spline)

CASES = [("octahedron", 3), ("octahedron", 4), ("cube", 2), ("tetrahedron", 4),
         ("torus-two-triangles", 4), ("planar-triangulated-square", 3), ("pruned-octahedron", 4),
         ("pruned-octahedron", 5)]


def _in_kernel(gs, sp):
    sysm = SplineSystem(gs, sp.degree)
    x = sp.vector()
    return all(sum((c * x[j] for j, c in r.items()), Fraction(0)) == 0 for r in sysm.rows)


@pytest.mark.parametrize("name,k", CASES)
def test_basis_is_complete_and_independent(surface, name, k):
    gs = surface(name)
    cat = assemble_basis(gs, k)
    assert cat.complete and len(cat) == dimension_oracle(gs, k)
    vecs = [{n: c for n, c in enumerate(m.spline.vector()) if c} for m in cat.members]
    assert rank(vecs) == len(vecs)
    for m in cat.members:
        assert verify_spline(gs, m.spline).ok
        assert _in_kernel(gs, m.spline)


def test_pruned_octahedron_basis_uses_construction(surface):
    # at k = 6 every edge completely separates and the classes span the space
    cat = assemble_basis(surface("pruned-octahedron"), 6)
    assert len(cat) == 83 and cat.count("oracle") == 0
    assert cat.count("E1") > 0 and cat.count("E2") > 0 and cat.count("E4") > 0


def test_low_degree_supplements(surface):
    counts = [assemble_basis(surface("pruned-octahedron"), k).count("oracle") for k in (4, 5)]
    assert counts == [4, 2]


def test_cube_low_degree_needs_supplement(surface):
    cat = assemble_basis(surface("cube"), 2)
    assert len(cat) == 6 and cat.count("oracle") == 6


def test_vertex_splines_are_local(surface):
    gs = surface("pruned-octahedron")
    v = _vertex_index(gs, "A")
    star = {f for f, p in enumerate(gs.surface.polygons) if "A" in p.labels}
    sps = vertex_basis_splines(gs, v, 4)
    assert len(sps) == 3 + 4 - 4 + 1  # valency 4, all joining, crossing
    for sp in sps:
        assert verify_spline(gs, sp).ok
        assert set(sp.support()) <= star


def test_vertex_jets_round_trip(surface):
    gs = surface("pruned-octahedron")
    G = json.loads(open(__file__.rsplit("/", 1)[0] + "/golden/vertex_A.json").read())
    c, e, d = cross_pattern(G["freedom"]["a"], "B", "F", "E", "D")
    sp = vertex_figure_spline(gs, "A", 4, c, e, d)
    jets = vertex_jets(gs, sp, _vertex_index(gs, "A"))
    want = corner_pattern_jets(gs, "A", 4, c, e, d)
    assert [j.as_tuple() for j in jets] == [tuple(w) for w in want]
    assert all(j.c00 == 1 for j in jets)


def test_vertex_degree_too_low(surface):
    gs = surface("cube")
    with pytest.raises(DegreeTooLow):
        vertex_basis_splines(gs, 0, 2)


def test_perturbation_is_detected(surface):
    gs = surface("octahedron")
    sp = Spline.constant(gs, 3, 5)
    assert verify_spline(gs, sp).ok
    vec = sp.vector()
    vec[1] += 1  # a control point on the boundary row of face 0
    bad = Spline.from_vector(gs, 3, vec)
    res = verify_spline(gs, bad)
    assert not res.ok and res.failures()


def test_degree_mismatch(surface):
    gs = surface("octahedron")
    with pytest.raises(DegreeMismatch):
        Spline.constant(gs, 3) + Spline.constant(gs, 4)
    with pytest.raises(DegreeMismatch):
        verify_spline(gs, Spline(3, ()))


def test_formula_fields(surface):
    f = dimension_formula(surface("octahedron"), 4)
    assert f.value == 24 and f.valid and f.caveat() == "exact"
    low = dimension_formula(surface("torus-two-triangles"), 4)
    assert not low.valid and low.lowerBound and "lower bound" in low.caveat()
    assert dimension_formula(surface("octahedron"), 1).caveat() == "no claim (k < 2)"
    # orientable closed surfaces also get the genus form
    assert f.genusForm == f.value


def test_realize_constant_coordinates(surface):
    gs = surface("octahedron")
    sx, sy, sz = (Spline.constant(gs, 3, c) for c in (1, 2, 3))
    mesh = realize(gs, sx, sy, sz, n=4)
    assert all(v == (1.0, 2.0, 3.0) for v in mesh.vertices)
    obj = mesh.to_obj()
    assert obj.count("\no face") == 8
    assert len(mesh.faces) == 8 * 16


def test_realize_sample_counts(surface):
    gs = surface("octahedron")
    cat = assemble_basis(gs, 4)
    sx, sy, sz = (cat.members[i].spline for i in range(3))
    mesh = realize(gs, sx, sy, sz, n=3)
    assert len(mesh.vertices) == 8 * 10
    with pytest.raises(DegreeMismatch):
        realize(gs, sx, sy, Spline.constant(gs, 3))
