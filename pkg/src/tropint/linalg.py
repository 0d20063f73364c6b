"""Exact linear algebra over Q and Z.

Vectors are tuples of ``Fraction`` (or ``int``); matrices are sequences of
row vectors.  Nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple
Matrix = Sequence[Sequence]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'a/b' string")
    return Fraction(x)


def fvec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(frac(x) for x in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Smallest positive multiple of ``v`` lying in Z^n with coprime entries."""
    fv = fvec(v)
    den = reduce(lcm, (a.denominator for a in fv), 1)
    ints = [int(a * den) for a in fv]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(a // g for a in ints)


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(fvec(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, n: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x in Q^n : rows . x = 0}."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of a x = b, or None if singular or inconsistent."""
    n = len(a[0])
    aug = [list(fvec(r)) + [frac(bi)] for r, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots or len(pivots) != n:
        return None
    return tuple(row[n] for row in red)


def solve_any(a: Matrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """Some solution of a x = b (free variables set to 0), or None."""
    n = len(a[0])
    aug = [list(fvec(r)) + [frac(bi)] for r, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def det(m: Matrix) -> Fraction:
    a = [list(fvec(r)) for r in m]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def project_off(v: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the complement of span(basis)."""
    v = fvec(v)
    if not basis:
        return v
    b = [fvec(x) for x in basis]
    gram = [[dot(x, y) for y in b] for x in b]
    coeffs = solve(gram, [dot(x, v) for x in b])
    if coeffs is None:
        # dependent basis: reduce first
        red, _ = rref(b)
        return project_off(v, red)
    return tuple(vi - sum(c * x[i] for c, x in zip(coeffs, b)) for i, vi in enumerate(v))


# ---------------------------------------------------------------- lattices


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_rows(rows: Matrix) -> list[tuple[int, ...]]:
    """Row Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``, so the result is a canonical basis of the row lattice.
    """
    m = [list(int(x) for x in r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        # gcd-combine column c into row r
        for i in range(r + 1, len(m)):
            if m[i][c] == 0:
                continue
            a, b = m[r][c], m[i][c]
            g, x, y = _xgcd(a, b)
            ra, rb = m[r], m[i]
            m[r] = [x * p + y * q for p, q in zip(ra, rb)]
            m[i] = [(a // g) * q - (b // g) * p for p, q in zip(ra, rb)]
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            pv = m[r][c]
            for i in range(r):
                q = m[i][c] // pv
                if q:
                    m[i] = [p - q * s for p, s in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [tuple(row) for row in m[:r] if any(row)]


def integer_kernel(rows: Matrix, n: int) -> list[tuple[int, ...]]:
    """Canonical Z-basis (row HNF) of {x in Z^n : rows . x = 0}.

    ``rows`` may be rational; each row is scaled to an integer row first.
    """
    a = [primitive(r) for r in rows if not is_zero(fvec(r))]
    if not a:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    k = len(a)
    # unimodular row reduction of [A^T | I]
    m = [[a[j][i] for j in range(k)] + [int(i == t) for t in range(n)] for i in range(n)]
    r = 0
    for c in range(k):
        for i in range(r + 1, n):
            if m[i][c] == 0:
                continue
            x1, x2 = m[r][c], m[i][c]
            g, x, y = _xgcd(x1, x2)
            ra, rb = m[r], m[i]
            m[r] = [x * p + y * q for p, q in zip(ra, rb)]
            m[i] = [(x1 // g) * q - (x2 // g) * p for p, q in zip(ra, rb)]
        if r < n and m[r][c] != 0:
            r += 1
    kernel = [tuple(row[k:]) for row in m if all(v == 0 for v in row[:k])]
    return hermite_rows(kernel)


def lattice_saturation(vectors: Matrix, n: int) -> list[tuple[int, ...]]:
    """Canonical Z-basis of span(vectors) ∩ Z^n."""
    if not vectors or all(is_zero(fvec(v)) for v in vectors):
        return []
    return integer_kernel(integer_kernel(vectors, n), n)
