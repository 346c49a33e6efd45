import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from g1surf.builder import (BUILTINS, EndDesign, InfeasibleInterpolation, InfeasibleParams,
                            IrrationalValue, UnknownName, builtin_surface, common_end_values,
                            hahn_gluing, hahn_vertex_data, interpolate_edge, planar_mesh,
                            random_planar_mesh, solve_unit_gamma_vertex)
from g1surf.complex import build_surface
from g1surf.exactalg import U
from g1surf.figures import edge_frame
from g1surf.gluing import EdgeGluing, cycle_matrices, end_frame, validate_g1

from strategies import rationals

MANY = settings(max_examples=200, deadline=None)


# worked example: u starts at the first label, side 1 is the face with the third
PRUNED_DATA = [
    ("E", "F", "A", EdgeGluing.make(1, U(0, 2), -1)),
    ("E", "A", "F", EdgeGluing.make(1, U(0, 2), -1)),
    ("F", "A", "E", EdgeGluing.make(1, U(0, 2), -1)),
    ("E", "B", "A", EdgeGluing.make(1, U(0, 2, 1), -1)),
    ("F", "D", "A", EdgeGluing.make(1, U(0, 2, 1), -1)),
    ("A", "B", "E", EdgeGluing.make(1, U(0, 2), -1, 0, 1)),
    ("A", "D", "F", EdgeGluing.make(1, U(0, 2), -1, 0, 1)),
    ("C", "B", "E", EdgeGluing.make(1, U(0, 2), -1, 0, 1)),
]


@pytest.mark.parametrize("x,y,side1,want", PRUNED_DATA)
def test_pruned_octahedron_data(surface, x, y, side1, want):
    g, _ = edge_frame(surface("pruned-octahedron"), x, y, side1)
    assert g.same_as(want), g


def test_alternative_data_differs_only_on_EB_FD(surface):
    a, b = surface("pruned-octahedron"), surface("pruned-octahedron-alt")
    changed = [i for i, (g, h) in enumerate(zip(a.data, b.data)) if not g.same_as(h)]
    labels = {frozenset(a.surface.edge_endpoints(i)) for i in changed}
    s = a.surface
    names = {frozenset(s.orbit_label(v) for v in e) for e in labels}
    assert names == {frozenset("EB"), frozenset("FD")}


def test_platonic_data(surface):
    for name, beta in (("octahedron", U(0, 2)), ("cube", U(-1, 2)), ("tetrahedron", U(-1, 4))):
        for g in surface(name).data:
            assert g.same_as(EdgeGluing(U(1), beta, U(-1), g.r1, g.r2)), (name, g)


def test_hahn_vertex_data():
    assert hahn_vertex_data(3) == (-1, -1)
    assert hahn_vertex_data(4) == (0, -1)
    assert hahn_vertex_data(6) == (1, -1)
    with pytest.raises(IrrationalValue):
        hahn_vertex_data(5)


@MANY
@given(st.sampled_from([4, 5, 6]), st.data())
def test_unit_gamma_vertex_solutions_close_the_cycle(n, data):
    if n == 4:
        params = (data.draw(st.sampled_from([1, 2])), data.draw(rationals()))
    elif n == 5:
        b1, b2 = data.draw(rationals()), data.draw(rationals())
        # beta1 + beta3 = 1 + beta1 beta2 beta3 solved for beta3
        assume(1 - b1 * b2 != 0)
        params = (b1, b2, (1 - b1) / (1 - b1 * b2))
    else:
        b1, b2, b3 = data.draw(rationals()), data.draw(rationals()), data.draw(rationals())
        coef = b1 + b3 - b1 * b2 * b3
        assume(coef != 0)
        params = (b1, b2, b3, (2 - b1 * b2) / coef)
    d = solve_unit_gamma_vertex(n, params)
    assert cycle_matrices(d.betas, d.gammas).ok


def test_unit_gamma_infeasible():
    with pytest.raises(InfeasibleParams):
        solve_unit_gamma_vertex(5, (0, 0, 0))


ends = st.builds(EndDesign.make, rationals(-3, 3, 2), rationals(-4, -1, 1), st.none() | rationals(-3, 3, 2))


@MANY
@given(ends, ends, st.tuples(st.integers(0, 1), st.integers(0, 1)))
def test_interpolation_honours_both_ends(A, B, sides):
    g = interpolate_edge(A, B, sides)
    assert (g.r1, g.r2) == sides
    for end, want in ((0, A), (1, B)):
        h = end_frame(g, end)
        assert h.beta(0) == want.beta and h.gamma(0) == want.gamma
        if want.beta_deriv is not None:
            # gamma is linear, so beta' in the end frame is read directly
            assert h.beta_deriv(0) == want.beta_deriv
    assert g.is_coprime()


@MANY
@given(ends, ends)
def test_fractional_linear_policy(A, B):
    A = EndDesign(A.beta, Fraction(-1), A.beta_deriv)
    B = EndDesign(B.beta, Fraction(-1), None)
    try:
        g = interpolate_edge(A, B, (0, 0), policy="fractional-linear")
    except InfeasibleInterpolation:
        return
    assert g.a_nonvanishing()
    assert g.beta(0) == A.beta and end_frame(g, 1).beta(0) == B.beta
    if A.beta_deriv is not None:
        assert g.beta_deriv(0) == A.beta_deriv


def test_fractional_linear_worked_case():
    # beta(0) = 0 with beta'(0) = 2 towards a Hahn valency-3 end gives 6u / (3 - u)
    g = interpolate_edge(EndDesign.make(0, -1, 2), EndDesign.make(-1, -1), policy="fractional-linear")
    assert g.same_as(EdgeGluing.make(U(3, -1), U(0, 6), U(-3, 1)))
    b0, _, b1, _, _, _ = common_end_values(EndDesign.make(0, -1, 2), EndDesign.make(-1, -1))
    assert (b0, b1) == (0, 3)


def test_interpolation_policy_errors():
    A, B = EndDesign.make(0, -1, 1), EndDesign.make(0, -1)
    with pytest.raises(InfeasibleInterpolation):
        interpolate_edge(A, B, policy="linear")
    with pytest.raises(InfeasibleInterpolation):
        interpolate_edge(A, B, policy="cubic")


def test_hahn_gluing_on_bare_octahedron():
    faces = ["ABE", "BCE", "CDE", "DAE", "BAF", "CBF", "DCF", "ADF"]
    s = build_surface({"polygons": [{"kind": "triangle", "vertices": list(f)} for f in faces]})
    gs = hahn_gluing(s)
    assert validate_g1(gs).ok


@MANY
@given(st.integers(0, 10 ** 6))
def test_random_planar_meshes_validate(seed):
    gs = random_planar_mesh(random.Random(seed), 2, 8)
    assert validate_g1(gs).ok


def test_planar_mesh_cells():
    gs = planar_mesh([(0, 0, "square"), (1, 0, "slash"), (0, 1, "backslash")])
    assert len(gs.surface.polygons) == 5
    assert validate_g1(gs).ok


def test_unknown_builtin():
    with pytest.raises(UnknownName):
        builtin_surface("dodecahedron")
    assert "pfcontra" in BUILTINS
