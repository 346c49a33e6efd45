"""Hypothesis strategies shared by the property tests."""

import random
from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from g1surf.builder import random_planar_mesh
from g1surf.exactalg import UniPoly
from g1surf.gluing import EdgeGluing

small_int = st.integers(-3, 3)


@st.composite
def polys(draw, max_deg=3, nonzero=False):
    cs = draw(st.lists(small_int, min_size=1, max_size=max_deg + 1))
    p = UniPoly(cs)
    if nonzero:
        assume(not p.is_zero())
    return p


@st.composite
def coprime_gluings(draw, max_deg=3):
    a = draw(polys(max_deg, nonzero=True))
    b = draw(polys(max_deg))
    c = draw(polys(max_deg))
    r1, r2 = draw(st.integers(0, 1)), draw(st.integers(0, 1))
    g = EdgeGluing(a, b, c, r1, r2)
    assume(g.is_coprime())
    return g


@st.composite
def rationals(draw, lo=-20, hi=20, max_den=6):
    return Fraction(draw(st.integers(lo, hi)), draw(st.integers(1, max_den)))


def planar_meshes():
    return st.integers(0, 10 ** 6).map(lambda s: random_planar_mesh(random.Random(s), 2, 8))


@st.composite
def valid_gluings(draw, max_deg=2):
    """Coprime gluings with a free of roots and gamma < 0 on [0, 1]."""
    g = draw(coprime_gluings(max_deg))
    assume(g.a_nonvanishing() and g.gamma_negative())
    return g
