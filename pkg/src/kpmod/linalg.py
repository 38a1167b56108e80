"""Sparse exact-rational linear algebra.

Vectors are dicts mapping basis indices to nonzero Fractions.  The Echelon
class maintains an incrementally grown reduced row-echelon basis (pivot =
smallest nonzero index, pivot entries normalized to 1 and eliminated from
all other rows), which makes spans, membership tests, and coordinates
deterministic.
"""

from __future__ import annotations

from fractions import Fraction

ONE = Fraction(1)


def axpy(acc: dict, c, v: dict) -> None:
    """acc += c * v, in place, dropping zeros."""
    if not c:
        return
    for i, x in v.items():
        y = acc.get(i, 0) + c * x
        if y:
            acc[i] = y
        else:
            del acc[i]


def scaled(v: dict, c) -> dict:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


class Echelon:
    """Reduced echelon basis of a growing subspace."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict = {}  # pivot index -> row (row[pivot] == 1)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the current span (a fresh dict)."""
        v = dict(vec)
        # rows are fully reduced, so one ascending pass suffices
        for p in sorted(self.rows):
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[p])
        return v

    def insert(self, vec: dict):
        """Add vec to the span; returns the new pivot, or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = ONE / v[p]
        row = {i: c * inv for i, c in v.items()}
        for other in self.rows.values():
            c = other.get(p)
            if c:
                axpy(other, -c, row)
        self.rows[p] = row
        return p

    def express(self, vec: dict) -> dict:
        """Coordinates {pivot: coeff} of vec in the row basis.

        Raises ValueError if vec is not in the span.
        """
        v = dict(vec)
        coeffs = {}
        for p in sorted(self.rows):
            c = v.get(p)
            if c:
                coeffs[p] = c
                axpy(v, -c, self.rows[p])
        if v:
            raise ValueError("vector is not in the span")
        return coeffs


def solve_nullspace(equations, nvars: int) -> list:
    """Basis of solutions of homogeneous linear equations over the rationals.

    Equations are dicts {var index: coeff}.  Returns one reduced solution per
    free variable, in ascending free-variable order: the solution has a 1 at
    its free variable and is supported on that variable and the pivots.
    """
    ech = Echelon()
    for eq in equations:
        ech.insert(eq)
    pivots = ech.rows
    sols = []
    for f in range(nvars):
        if f in pivots:
            continue
        sol = {f: ONE}
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                sol[p] = -c
        sols.append(sol)
    return sols
