import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g1surf.edgespline import jet_vector
from g1surf.figures import (_column, cross_pattern, diamond, dual_edge_basis, edge_frame,
                            fan3_lattice, fan3_pattern, jet_functionals, vertex_figure_spline)
from g1surf.splinespace import DegreeTooLow, verify_spline

from strategies import valid_gluings

GOLDEN = Path(__file__).parent / "golden"


@settings(max_examples=200, deadline=None)
@given(valid_gluings(max_deg=2), st.integers(1, 8))
def test_dual_basis_is_dual(g, k):
    funcs = jet_functionals(g)
    try:
        basis = dual_edge_basis(g, k)
    except ValueError:
        return
    assert len(basis) == len(funcs)
    for t, e in enumerate(basis):
        assert e.fits(g, k) and e.is_g1(g)
        J = jet_vector(e, g)
        assert [J[_column(*f)] for f in funcs] == [int(t == r) for r in range(len(funcs))]


def test_dual_basis_needs_separation(surface):
    g, _ = edge_frame(surface("pruned-octahedron"), "E", "B", "A")
    with pytest.raises(ValueError):
        dual_edge_basis(g, 5)
    assert len(dual_edge_basis(g, 6)) == 9


def test_side1_restrictions_have_low_degree(surface):
    # the normalization keeps h1 as short as the thoroughly vanishing freedom allows
    g, _ = edge_frame(surface("pruned-octahedron"), "E", "F", "A")
    for e in dual_edge_basis(g, 4):
        assert e.h1.deg() <= 3


def test_edge_frame_unknown_edge(surface):
    with pytest.raises(KeyError):
        edge_frame(surface("pruned-octahedron"), "B", "D", "A")


def test_diamond_shape(surface):
    gs = surface("pruned-octahedron")
    G = json.loads((GOLDEN / "vertex_A.json").read_text())
    c, e, d = cross_pattern(G["freedom"]["b"], "B", "F", "E", "D")
    sp = vertex_figure_spline(gs, "A", 4, c, e, d)
    rows = diamond(gs, sp, "A", "B", "F", "E", "D")
    assert len(rows) == 9 and len(rows[4]) == 9
    assert rows[4][4] == c


def test_fan3_lattice_centre(surface):
    gs = surface("pruned-octahedron")
    G = json.loads((GOLDEN / "vertex_B.json").read_text())
    c, e, d = fan3_pattern(G["freedom"]["b"], "E", "A", "C")
    sp = vertex_figure_spline(gs, "B", 4, c, e, d, pattern_degree=6)
    assert verify_spline(gs, sp).ok
    lat = fan3_lattice(gs, sp, "B", "E", "A", "C")
    assert lat[(4, 7)] == c


def test_unrealizable_pattern(surface):
    gs = surface("pruned-octahedron")
    # a mismatched layout asks for jets that violate the vertex relations
    G = json.loads((GOLDEN / "vertex_A.json").read_text())
    c, e, d = cross_pattern(G["freedom"]["a"], "D", "F", "E", "B")
    with pytest.raises(DegreeTooLow):
        vertex_figure_spline(gs, "C", 4, c, e, d)
