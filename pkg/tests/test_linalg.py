from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from g1surf.linalg import Echelon, dense_rows, matrix_rank, nullspace, rank, solve

MANY = settings(max_examples=200, deadline=None)


@st.composite
def matrices(draw):
    m, n = draw(st.integers(1, 6)), draw(st.integers(1, 6))
    entry = st.integers(-3, 3) | st.just(0)
    return [[Fraction(draw(entry)) for _ in range(n)] for _ in range(m)], n


def _sym(M):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in M])


@MANY
@given(matrices())
def test_rank_and_nullspace_match_sympy(Mn):
    M, n = Mn
    want = _sym(M).rank()
    assert matrix_rank(M) == want
    ns = nullspace(dense_rows(M), n)
    assert len(ns) == n - want
    for x in ns:
        assert all(sum(a * b for a, b in zip(r, x)) == 0 for r in M)
    assert rank(dense_rows(ns)) == len(ns)


@MANY
@given(matrices(), st.data())
def test_solve_consistent_systems(Mn, data):
    M, n = Mn
    x0 = [Fraction(data.draw(st.integers(-4, 4))) for _ in range(n)]
    rhs = [sum(a * b for a, b in zip(r, x0)) for r in M]
    x = solve(dense_rows(M), rhs, n)
    assert x is not None
    assert [sum(a * b for a, b in zip(r, x)) for r in M] == rhs


def test_solve_inconsistent():
    assert solve(dense_rows([[1, 1], [2, 2]]), [Fraction(1), Fraction(3)], 2) is None


def test_echelon_incremental():
    e = Echelon()
    assert e.add({0: Fraction(1), 1: Fraction(2)})
    assert not e.add({0: Fraction(2), 1: Fraction(4)})
    assert e.add({1: Fraction(1)})
    assert e.rank == 2
    assert e.reduce({0: Fraction(5), 1: Fraction(7)}) == {}
