"""Exact sparse linear algebra over Q.

Rows are dictionaries ``{column: Fraction}``.  Elimination is plain Gaussian
elimination on Fractions; every intermediate value is exact, so the result
does not depend on pivot order beyond the choice of basis it returns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

Row = Dict[int, Fraction]


def _axpy(target: Row, f: Fraction, src: Row) -> None:
    """target -= f * src, dropping cancelled entries."""
    for c, v in src.items():
        nv = target.get(c, 0) - f * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class Echelon:
    """Incremental row echelon form; pivot rows are scaled to a leading 1."""

    def __init__(self):
        self.pivots: Dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            done = True
            for c in sorted(r):
                p = self.pivots.get(c)
                if p is not None:
                    _axpy(r, r[c], p)
                    done = False
                    break
            if done:
                break
        return r

    def add(self, row: Row) -> bool:
        """Insert a row; returns True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        self.pivots[c] = {j: v * inv for j, v in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced(self) -> Dict[int, Row]:
        """Fully reduced rows (each pivot column appears in one row only)."""
        out: Dict[int, Row] = {}
        for c in sorted(self.pivots, reverse=True):
            r = dict(self.pivots[c])
            for j in sorted(r):
                if j != c and j in out:
                    _axpy(r, r[j], out[j])
            out[c] = r
        return out


def rank(rows: Iterable[Row]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.reduced()
    free = [j for j in range(ncols) if j not in red]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for p, r in red.items():
            v = r.get(f)
            if v:
                x[p] = -v
        basis.append(x)
    return basis


def solve(rows: Sequence[Row], rhs: Sequence[Fraction], ncols: int):
    """One solution of rows . x = rhs (free variables set to 0), or None."""
    aug = ncols
    e = Echelon()
    for r, b in zip(rows, rhs):
        rr = dict(r)
        if b:
            rr[aug] = Fraction(b)
        e.add(rr)
    if aug in e.pivots:
        return None
    x = [Fraction(0)] * ncols
    for p, r in e.reduced().items():
        x[p] = r.get(aug, Fraction(0))
    return x


def dense_rows(matrix: Sequence[Sequence]) -> List[Row]:
    return [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    return rank(dense_rows(matrix))
