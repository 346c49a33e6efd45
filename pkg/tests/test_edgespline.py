
from hypothesis import given, settings
from hypothesis import strategies as st

from g1surf.edgespline import (EdgeSpline, edge_space_basis, edge_space_dim, im_w_dim, is_joining,
                               jet_vector, separation_profile, spline_to_syzygy,
                               syzygy_to_edge_spline, thoroughly_vanishing, w_jets, w_rank)
from g1surf.exactalg import U
from g1surf.figures import edge_frame
from g1surf.gluing import EdgeGluing

from strategies import valid_gluings

MANY = settings(max_examples=200, deadline=None)


def _end1_jet(h0, h1, shear):
    # p(1 - u - s v, v) = h0(1 - u - s v) + h1(1 - u - s v) v, expanded by hand
    d0, d1 = h0.derive(), h1.derive()
    return (h0(1), -d0(1), -shear * d0(1) + h1(1), shear * d0.derive()(1) - d1(1))


@MANY
@given(valid_gluings(), st.integers(1, 6))
def test_basis_is_g1_and_jets_match_hand_expansion(g, k):
    basis = edge_space_basis(g, k)
    assert len(basis) == edge_space_dim(g, k)
    s1, s2 = g.shears
    for e in basis:
        assert e.fits(g, k)
        # a h1 = b h0' + c h2 along the edge
        assert (g.a * e.h1 - g.b * e.h0.derive() - g.c * e.h2).is_zero()
        (j10, j20), (j11, j21) = w_jets(e, g)
        assert j10.as_tuple() == (e.h0(0), e.h0.derive()(0), e.h1(0), e.h1.derive()(0))
        assert j20.as_tuple() == (e.h0(0), e.h0.derive()(0), e.h2(0), e.h2.derive()(0))
        assert j11.as_tuple() == _end1_jet(e.h0, e.h1, s1)
        assert j21.as_tuple() == _end1_jet(e.h0, e.h2, s2)


@MANY
@given(valid_gluings(), st.integers(1, 6))
def test_thoroughly_vanishing_complement(g, k):
    tv = thoroughly_vanishing(g, k)
    assert len(tv) == edge_space_dim(g, k) - w_rank(g, k)
    for e in tv:
        assert not any(jet_vector(e, g))
    assert w_rank(g, k) <= im_w_dim(g, 0) + im_w_dim(g, 1)


@settings(max_examples=200, deadline=None)
@given(valid_gluings(max_deg=2))
def test_separation_degrees_respect_bounds(g):
    rep = separation_profile(g)
    assert rep.d1 + rep.d2 == rep.delta + 2 - g.r1 - g.r2
    assert rep.separatingDegree is not None and rep.separatingDegree <= rep.separatingBound
    assert rep.completeSeparationDegree is not None
    assert rep.completeSeparationDegree <= rep.completeSeparationBound
    assert rep.offsetDegree is not None and rep.offsetDegree <= rep.offsetBound
    assert rep.refinedCompleteSeparationBound <= rep.completeSeparationBound


def test_refined_bound_is_not_universal():
    # joining at both ends with d1 < d2, yet complete separation needs degree 5
    rep = separation_profile(EdgeGluing.make(-1, 0, U(1, 0, 1), 1, 1))
    assert rep.joining == (True, True) and (rep.d1, rep.d2) == (1, 2)
    assert rep.refinedCompleteSeparationBound == 4 < rep.completeSeparationDegree == 5


def test_refined_bound_met_on_worked_example(surface):
    for name in ("pruned-octahedron", "pruned-octahedron-alt"):
        gs = surface(name)
        for x, y, side1 in (("E", "F", "A"), ("A", "B", "E"), ("E", "B", "A"), ("F", "D", "A"),
                            ("A", "D", "F"), ("C", "B", "E")):
            rep = separation_profile(edge_frame(gs, x, y, side1)[0])
            assert rep.completeSeparationDegree == rep.refinedCompleteSeparationBound, (name, x + y)


def test_syzygy_round_trip():
    e = EdgeSpline.make(U(3, 1, 2), U(0, 1), U(5))
    assert syzygy_to_edge_spline(spline_to_syzygy(e), 3) == e


def test_joining_ends(surface):
    gs = surface("pruned-octahedron")
    g, _ = edge_frame(gs, "E", "F", "A")
    assert is_joining(g, 0) and is_joining(g, 1)
    assert im_w_dim(g, 0) == 4
    g, _ = edge_frame(gs, "A", "B", "E")
    assert is_joining(g, 0) and not is_joining(g, 1)
    assert len(edge_space_basis(g, 4)) == edge_space_dim(g, 4)


def test_constant_gluing_profile():
    rep = separation_profile(EdgeGluing.make(1, U(0, 2), -1))
    assert (rep.d1, rep.d2) == (1, 2)
    assert rep.joining == (True, True)
    assert rep.completeSeparationDegree == 4
