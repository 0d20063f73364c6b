"""Exact rational linear programming (two-phase tableau simplex, Bland's rule).

This is the single feasibility kernel of the package: every emptiness or
intersection test on polyhedra goes through :func:`linprog`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import frac


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    pv = tab[row][col]
    tab[row] = [v / pv for v in tab[row]]
    prow = tab[row]
    for i, r in enumerate(tab):
        if i != row and r[col] != 0:
            f = r[col]
            tab[i] = [a - f * b for a, b in zip(r, prow)]
    basis[row] = col


def _simplex(tab: list[list[Fraction]], basis: list[int], ncols: int) -> str:
    """Maximise the objective stored in the last row (as reduced costs).

    The last row holds ``-c`` style reduced costs: a negative entry means the
    column improves the objective.  Bland's rule guarantees termination.
    """
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], col)


def linprog(
    c: Sequence | None,
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    n: int | None = None,
) -> LPResult:
    """Maximise ``c.x`` subject to ``a_ub x <= b_ub`` and ``a_eq x = b_eq``.

    Variables are free.  With ``c=None`` only feasibility is decided and any
    feasible point is returned.
    """
    if n is None:
        if c is not None:
            n = len(c)
        elif a_ub:
            n = len(a_ub[0])
        elif a_eq:
            n = len(a_eq[0])
        else:
            raise ValueError("cannot infer the number of variables")
    rows: list[tuple[list[Fraction], Fraction, bool]] = []
    for r, b in zip(a_ub, b_ub):
        rows.append(([frac(v) for v in r], frac(b), True))
    for r, b in zip(a_eq, b_eq):
        rows.append(([frac(v) for v in r], frac(b), False))
    m = len(rows)
    if m == 0:
        zero = tuple(Fraction(0) for _ in range(n))
        if c is not None and any(frac(v) != 0 for v in c):
            return LPResult("unbounded")
        return LPResult("optimal", zero, Fraction(0))

    # columns: x+ (n), x- (n), slacks (m_ub), artificials (m), rhs
    n_ub = sum(1 for _, _, ub in rows if ub)
    nx = 2 * n
    n_real = nx + n_ub
    ncols = n_real + m
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    slack = nx
    for i, (r, b, ub) in enumerate(rows):
        line = [Fraction(0)] * (ncols + 1)
        for j, v in enumerate(r):
            line[j] = v
            line[n + j] = -v
        if ub:
            line[slack] = Fraction(1)
            slack += 1
        line[-1] = b
        if b < 0:
            line = [-v for v in line]
        line[n_real + i] = Fraction(1)
        tab.append(line)
        basis.append(n_real + i)

    # phase 1: maximise -(sum of artificials)
    obj = [Fraction(0)] * (ncols + 1)
    for line in tab:
        for j in range(n_real):
            obj[j] -= line[j]
        obj[-1] -= line[-1]
    tab.append(obj)
    _simplex(tab, basis, n_real)
    if tab[-1][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n_real:
            col = next((j for j in range(n_real) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n_real]
    tab = [[row[j] for j in range(n_real)] + [row[-1]] for row in (tab[i] for i in keep)]
    basis = [basis[i] for i in keep]

    if c is not None:
        cc = [frac(v) for v in c]
        obj = [Fraction(0)] * (n_real + 1)
        for j in range(n):
            obj[j] = -cc[j]
            obj[n + j] = cc[j]
        for i, bcol in enumerate(basis):
            f = obj[bcol]
            if f != 0:
                obj = [a - f * b for a, b in zip(obj, tab[i])]
        tab.append(obj)
        status = _simplex(tab, basis, n_real)
        if status == "unbounded":
            return LPResult("unbounded")
        value = tab[-1][-1]
        tab.pop()
    else:
        value = None

    xs = [Fraction(0)] * n_real
    for i, bcol in enumerate(basis):
        xs[bcol] = tab[i][-1]
    x = tuple(xs[j] - xs[n + j] for j in range(n))
    if value is None:
        return LPResult("optimal", x, None)
    return LPResult("optimal", x, value)


def feasible_point(a_ub, b_ub, a_eq=(), b_eq=(), n=None) -> tuple[Fraction, ...] | None:
    res = linprog(None, a_ub, b_ub, a_eq, b_eq, n=n)
    return res.x if res.status == "optimal" else None
