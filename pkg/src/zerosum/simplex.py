"""Exact rational simplex method (two-phase, Bland's rule).

Solves ``max c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0`` over
:class:`fractions.Fraction`.  Bland's smallest-index rule is used for both the
entering and the leaving variable, so the method terminates on degenerate
problems and the returned basic solution is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class LPError(Exception):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass
class LPResult:
    value: Fraction
    x: list[Fraction]
    pivots: int


class _Tableau:
    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows          # list of dicts col -> Fraction (sparse)
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols
        self.pivots = 0

    def objective(self, cost):
        """Reduced costs d_j = c_B B^-1 A_j - c_j and current value."""
        d = {j: -c for j, c in cost.items() if c}
        value = Fraction(0)
        for i, b in enumerate(self.basis):
            cb = cost.get(b, 0)
            if cb:
                value += cb * self.rhs[i]
                for j, a in self.rows[i].items():
                    d[j] = d.get(j, 0) + cb * a
        return {j: v for j, v in d.items() if v}, value

    def pivot(self, i, j, d):
        row = self.rows[i]
        piv = row[j]
        if piv != 1:
            row = {c: a / piv for c, a in row.items()}
            self.rhs[i] /= piv
            self.rows[i] = row
        for k, other in enumerate(self.rows):
            if k != i and j in other:
                factor = other[j]
                for c, a in row.items():
                    v = other.get(c, 0) - factor * a
                    if v:
                        other[c] = v
                    else:
                        other.pop(c, None)
                self.rhs[k] -= factor * self.rhs[i]
        if j in d:
            factor = d[j]
            for c, a in row.items():
                v = d.get(c, 0) - factor * a
                if v:
                    d[c] = v
                else:
                    d.pop(c, None)
        self.basis[i] = j
        self.pivots += 1

    def optimise(self, cost, allowed):
        d, _ = self.objective(cost)
        while True:
            entering = min((j for j, v in d.items() if v < 0 and j in allowed), default=None)
            if entering is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering, 0)
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded("objective is unbounded")
            self.pivot(best[1], entering, d)


def maximize(c: Sequence, A_ub: Sequence[Sequence] = (), b_ub: Sequence = (),
             A_eq: Sequence[Sequence] = (), b_eq: Sequence = ()) -> LPResult:
    nvar = len(c)
    rows, rhs, basis, artificial = [], [], [], []
    ncols = nvar
    for a, b in list(zip(A_ub, b_ub)) + list(zip(A_eq, b_eq)):
        if len(a) != nvar:
            raise ValueError("constraint row length does not match objective")
    for a, b in zip(A_ub, b_ub):
        row = {j: Fraction(v) for j, v in enumerate(a) if v}
        b = Fraction(b)
        slack = ncols
        ncols += 1
        row[slack] = Fraction(1)
        if b < 0:
            row = {j: -v for j, v in row.items()}
            b = -b
            art = ncols
            ncols += 1
            row[art] = Fraction(1)
            artificial.append(art)
            basis.append(art)
        else:
            basis.append(slack)
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = {j: Fraction(v) for j, v in enumerate(a) if v}
        b = Fraction(b)
        if b < 0:
            row = {j: -v for j, v in row.items()}
            b = -b
        art = ncols
        ncols += 1
        row[art] = Fraction(1)
        artificial.append(art)
        basis.append(art)
        rows.append(row)
        rhs.append(b)

    t = _Tableau(rows, rhs, basis, ncols)
    art_set = set(artificial)
    if artificial:
        t.optimise({a: Fraction(-1) for a in artificial}, set(range(ncols)))
        _, phase1 = t.objective({a: Fraction(-1) for a in artificial})
        if phase1 < 0:
            raise Infeasible("constraints are infeasible")
        # drive zero-valued artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(t.rows):
            if t.basis[i] in art_set:
                col = min((j for j, a in t.rows[i].items() if j not in art_set and a), default=None)
                if col is None:
                    del t.rows[i], t.rhs[i], t.basis[i]
                    continue
                t.pivot(i, col, {})
            i += 1
        for row in t.rows:
            for a in art_set:
                row.pop(a, None)
    cost = {j: Fraction(v) for j, v in enumerate(c) if v}
    t.optimise(cost, set(range(ncols)) - art_set)
    _, value = t.objective(cost)
    x = [Fraction(0)] * nvar
    for i, b in enumerate(t.basis):
        if b < nvar:
            x[b] = t.rhs[i]
    return LPResult(value, x, t.pivots)
