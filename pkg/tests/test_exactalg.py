from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from g1surf.exactalg import (RECTANGLE, TRIANGLE, BBForm, BiPoly, DegreeOverflow, InvalidCorner,
                             UniPoly, bb_index_count, bb_indices, corner_jet11, count_roots,
                             elevate, elevate_to, fmt_rat, from_bb, from_frame, jet_of_poly,
                             other_neighbour, poly_gcd, rat, sign_on_interval, to_bb, to_frame)

from strategies import polys, rationals

u = sympy.Symbol("u")
x, y = sympy.symbols("x y")
MANY = settings(max_examples=200, deadline=None)


def to_sym(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * u ** i for i, c in enumerate(p.coeffs))


def bi_sym(p: BiPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j for (i, j), c in p.coeffs.items())


@st.composite
def bipolys(draw, kind, k):
    terms = {}
    for (i, j) in ([(i, j) for j in range(k + 1) for i in range(k + 1 - j)] if kind == TRIANGLE
                   else [(i, j) for j in range(k + 1) for i in range(k + 1)]):
        if draw(st.booleans()):
            terms[(i, j)] = draw(rationals())
    return BiPoly(terms)


def test_rat_and_fmt():
    assert rat("3/6") == Fraction(1, 2)
    assert rat(" -4 ") == -4
    assert fmt_rat(Fraction(6, 3)) == "2"
    assert fmt_rat(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(TypeError):
        rat(0.5)


def test_unipoly_basics():
    p = UniPoly([1, 2, 0, 0])
    assert p.deg() == 1 and p.coeffs == (1, 2)
    assert UniPoly().deg() == -1
    assert (p * p)(3) == 49
    assert p.reflect() == UniPoly([3, -2])
    q, r = UniPoly([1, 0, 1]).divmod(UniPoly([1, 1]))
    assert q * UniPoly([1, 1]) + r == UniPoly([1, 0, 1])
    with pytest.raises(ZeroDivisionError):
        p.divmod(UniPoly())
    assert UniPoly([0, 0, 3]).integral().definite_integral() == Fraction(1, 4)


@MANY
@given(polys(4), polys(4))
def test_gcd_matches_sympy(p, q):
    g = poly_gcd(p, q)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    want = sympy.Poly(sympy.gcd(to_sym(p), to_sym(q)), u).monic()
    assert sympy.expand(to_sym(g) - want.as_expr()) == 0


@MANY
@given(polys(5, nonzero=True))
def test_root_count_matches_sympy(p):
    if p.deg() <= 0:
        assert count_roots(p) == 0
        return
    roots = {r for r in sympy.real_roots(sympy.Poly(to_sym(p), u)) if 0 <= r <= 1}
    assert count_roots(p, 0, 1) == len(roots)
    assert (sign_on_interval(p) == 0) == bool(roots)


@MANY
@given(polys(3), polys(3), rationals())
def test_arith_against_evaluation(p, q, t):
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)
    assert p.compose(q)(t) == p(q(t))
    assert p.derive()(t) == sympy.diff(to_sym(p), u).subs(u, sympy.Rational(t.numerator, t.denominator))


def _bernstein(kind, k, i, j):
    # independent closed forms on the reference polygons
    if kind == TRIANGLE:
        l = k - i - j
        return sympy.Rational(factorial(k), factorial(i) * factorial(j) * factorial(l)) * x ** i * y ** j * (1 - x - y) ** l
    return comb(k, i) * comb(k, j) * x ** i * (1 - x) ** (k - i) * y ** j * (1 - y) ** (k - j)


@MANY
@given(st.sampled_from([TRIANGLE, RECTANGLE]), st.integers(0, 4), st.data())
def test_bb_round_trip_and_bernstein(kind, k, data):
    p = data.draw(bipolys(kind, k))
    b = to_bb(p, kind, k)
    assert from_bb(b) == p
    expr = sum(sympy.Rational(c.numerator, c.denominator) * _bernstein(kind, k, i, j) for (i, j), c in b.items())
    assert sympy.expand(expr - bi_sym(p)) == 0


@MANY
@given(st.sampled_from([TRIANGLE, RECTANGLE]), st.integers(0, 3), st.data())
def test_elevation_preserves_polynomial(kind, k, data):
    p = data.draw(bipolys(kind, k))
    b = to_bb(p, kind, k)
    assert from_bb(elevate(b)) == p
    assert from_bb(elevate_to(b, k + 2)) == p
    with pytest.raises(DegreeOverflow):
        elevate_to(elevate(b), k)


@MANY
@given(st.sampled_from([TRIANGLE, RECTANGLE]), st.integers(1, 4), st.data())
def test_frames_and_corner_jets(kind, k, data):
    p = data.draw(bipolys(kind, k))
    n = 3 if kind == TRIANGLE else 4
    s = data.draw(st.integers(0, n - 1))
    t = data.draw(st.sampled_from([(s + 1) % n, (s - 1) % n]))
    fp = to_frame(p, kind, s, t)
    assert from_frame(fp, kind, s, t) == p
    assert corner_jet11(to_bb(p, kind, k), s, t) == jet_of_poly(fp)


def test_bb_shapes():
    assert bb_index_count(TRIANGLE, 4) == 15
    assert bb_index_count(RECTANGLE, 3) == 16
    assert len(list(bb_indices(TRIANGLE, 2))) == 6
    with pytest.raises(ValueError):
        BBForm.make(TRIANGLE, 1, [[1, 2], [3, 4]])
    with pytest.raises(DegreeOverflow):
        to_bb(BiPoly({(2, 0): 1}), TRIANGLE, 1)
    with pytest.raises(InvalidCorner):
        other_neighbour(RECTANGLE, 0, 2)
