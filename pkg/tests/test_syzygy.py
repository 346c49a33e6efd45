
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from g1surf.exactalg import U, UniPoly
from g1surf.gluing import EdgeGluing, NotCoprime
from g1surf.syzygy import (Syzygy, edge_delta, mu_basis, syzygy_basis, syzygy_kernel_dim,
                           syzygy_space_dim)

from strategies import coprime_gluings

MANY = settings(max_examples=200, deadline=None)
u = sympy.Symbol("u")


def _sym(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * u ** i for i, c in enumerate(p.coeffs))


def sympy_kernel_dim(g: EdgeGluing, k: int) -> int:
    """dim of {(A, B, C): aA + bB + cC = 0} with deg A < k + r1, deg B < k, deg C < k + r2."""
    sizes = (max(k + g.r1, 0), max(k, 0), max(k + g.r2, 0))
    unknowns = [sympy.symbols(f"x{n}_0:{m}") if m else () for n, m in enumerate(sizes)]
    if not sum(sizes):
        return 0
    polys = [sum(c * u ** i for i, c in enumerate(xs)) for xs in unknowns]
    expr = sympy.expand(sum(_sym(p) * q for p, q in zip((g.a, g.b, g.c), polys)))
    flat = [x for xs in unknowns for x in xs]
    eqs = sympy.Poly(expr, u).all_coeffs() if expr != 0 else []
    M = sympy.Matrix([[sympy.diff(e, x) for x in flat] for e in eqs]) if eqs else sympy.zeros(0, len(flat))
    return len(flat) - M.rank()


@settings(max_examples=200, deadline=None)
@given(coprime_gluings(max_deg=2), st.integers(0, 5))
def test_kernel_dim_matches_sympy(g, k):
    assert syzygy_kernel_dim(g, k) == sympy_kernel_dim(g, k)


@MANY
@given(coprime_gluings(), st.integers(0, 6))
def test_basis_elements_are_syzygies(g, k):
    basis = syzygy_basis(g, k)
    assert len(basis) == syzygy_kernel_dim(g, k)
    for z in basis:
        assert z.is_syzygy(g)
        assert z.twisted_degree(g.r1, g.r2) <= k


@MANY
@given(coprime_gluings())
def test_mu_basis_generates(g):
    m = mu_basis(g)
    # every syzygy of Z_k lies in the span of the multiples of Z1, Z2
    k = m.d2 + 1
    assert syzygy_space_dim(m, k) == syzygy_kernel_dim(g, k)
    assert m.leading_independent()


def test_constant_gluing():
    # a dv1 = 2u du - dv2 between two triangles
    g = EdgeGluing.make(1, U(0, 2), -1)
    m = mu_basis(g)
    assert edge_delta(g) == 1
    assert (m.d1, m.d2) == (1, 2)
    assert m.h0(g) not in (None, 0)
    assert [syzygy_space_dim(m, k) for k in range(5)] == [0, 1, 3, 5, 7]


def test_h0_rejects_non_multiples():
    g = EdgeGluing.make(1, U(0, 2), -1)
    m = mu_basis(g)
    other = EdgeGluing.make(1, U(0, 3), -1)
    assert m.h0(other) is None


def test_mu_basis_needs_coprime():
    with pytest.raises(NotCoprime):
        mu_basis(EdgeGluing.make(U(1, 1), U(1, 1), U(2, 2)))


def test_syzygy_algebra():
    z = Syzygy.make(1, 2, 3)
    assert (z + z - z) == z
    assert z.scale(U(0, 1)).A == U(0, 1)
    assert (z - z).is_zero()
    g = EdgeGluing.make(1, 1, -1)
    assert Syzygy.make(1, 0, 1).is_syzygy(g)
    assert Syzygy.make(1, 0, 1).residual(EdgeGluing.make(1, 1, 1)) == U(2)
