"""Independent ground truth for the tropical engine.

Nothing here touches the polyhedral code: the 1-D Newton polygon is a plain
monotone-chain lower hull, root counts come from exact resultants (sympy),
and the linear example is solved by a cross product.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import sympy as sp

from .errors import (DegenerateSystem, InvalidInput, NotFinite, PairingAmbiguous, StratumNotInFan,
                     UnrealizableValuation)
from .linalg import frac

INF = math.inf
T = sp.Symbol("t")
_X, _Y, _S = sp.symbols("x y s")


# ---------------------------------------------------------------- valuations


def padic_val(q, p: int) -> Fraction | float:
    """p-adic valuation of a rational; ``inf`` for zero."""
    q = Fraction(q)
    if q == 0:
        return INF
    v = 0
    a, b = q.numerator, q.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return Fraction(v)


def order_at_zero(expr) -> Fraction | float:
    """Order of vanishing at ``t = 0`` of a rational function of ``t``."""
    expr = sp.cancel(sp.sympify(expr))
    if expr == 0:
        return INF
    num, den = sp.fraction(expr)

    def order(poly):
        P = sp.Poly(poly, T)
        return min(m[0] for m in P.monoms())

    return Fraction(order(num) - order(den))


@dataclass(frozen=True)
class Valuation:
    """Either ``kind="p-adic"`` with a prime or ``kind="parameter"`` (order in ``t``)."""
    kind: str = "p-adic"
    prime: int = 3

    def __post_init__(self):
        if self.kind not in ("p-adic", "parameter"):
            raise InvalidInput(f"unknown valuation model {self.kind!r}")
        if self.kind == "p-adic" and (self.prime < 2 or not sp.isprime(self.prime)):
            raise InvalidInput(f"{self.prime} is not a prime")

    def __call__(self, c):
        if self.kind == "p-adic":
            return padic_val(c, self.prime)
        return order_at_zero(c)

    def coerce(self, c):
        if self.kind == "p-adic":
            return frac(c)
        return sp.cancel(sp.sympify(c, locals={"t": T}))


class LiteralPolynomial:
    """Laurent polynomial with exact coefficients and a valuation model."""

    def __init__(self, terms: Mapping[Sequence[int], object], valuation: Valuation = Valuation()):
        self.valuation = valuation
        out = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            c = valuation.coerce(c)
            if c == 0:
                raise InvalidInput(f"zero coefficient at {e}")
            out[e] = c
        if not out:
            raise InvalidInput("empty polynomial")
        if len({len(e) for e in out}) != 1:
            raise InvalidInput("exponents of different lengths")
        self.terms = dict(sorted(out.items()))
        self.n = len(next(iter(self.terms)))

    def __repr__(self) -> str:
        return f"LiteralPolynomial({self.terms})"

    def weights(self) -> dict[tuple[int, ...], Fraction]:
        return {e: self.valuation(c) for e, c in self.terms.items()}

    def to_tropical(self):
        from .tropical import TropicalPolynomial
        return TropicalPolynomial(self.weights(), n=self.n)

    def to_sympy(self, *gens):
        """Polynomial expression after clearing negative exponents."""
        shift = [min(e[i] for e in self.terms) for i in range(self.n)]
        expr = 0
        for e, c in self.terms.items():
            mono = 1
            for g, a, s in zip(gens, e, shift):
                mono *= g ** (a - s)
            expr += sp.sympify(c) * mono
        return sp.expand(expr)


# ---------------------------------------------------------------- Newton polygon


def _lower_hull(points: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    pts = sorted(points)
    hull: list[tuple[Fraction, Fraction]] = []
    for q in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (q[1] - y1) - (y2 - y1) * (q[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(q)
    return hull


def np1d(f) -> list[tuple[Fraction, int]]:
    """Root valuations and counts from the lower hull of ``{(nu, w_nu)}``.

    ``f`` is a one-variable TropicalPolynomial, a LiteralPolynomial, or a
    mapping ``nu -> weight``.  Segments are listed by increasing exponent.
    """
    if isinstance(f, LiteralPolynomial):
        f = f.weights()
    terms = f.terms if hasattr(f, "terms") else dict(f)
    pts = []
    for e, w in terms.items():
        e = e[0] if isinstance(e, tuple) else e
        if w == INF:
            continue
        pts.append((Fraction(e), Fraction(w)))
    if len(pts) < 2:
        return []
    hull = _lower_hull(pts)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append(((y1 - y2) / (x2 - x1), int(x2 - x1)))
    return out


def _units(p: int):
    k = 1
    while True:
        if k % p:
            yield k
        k += 1


def known_root_instance(valuations: Sequence, p: int) -> tuple[LiteralPolynomial, list[tuple[Fraction, int]]]:
    """Polynomial over Q with roots of prescribed p-adic valuations.

    An integer valuation ``v`` becomes a factor ``x - u p^v``; a value ``a/b``
    in lowest terms becomes ``x^b - u p^a`` (b conjugate roots), so such values
    must occur a multiple of ``b`` times.  Units ``u`` run over the integers
    prime to ``p`` so that repeated valuations give distinct roots.
    """
    if p < 2 or not sp.isprime(p):
        raise InvalidInput(f"{p} is not a prime")
    vals = [frac(v) for v in valuations]
    counts: dict[Fraction, int] = {}
    for v in vals:
        counts[v] = counts.get(v, 0) + 1
    x = _X
    poly = sp.Integer(1)
    units = _units(p)
    for v in sorted(counts, reverse=True):
        b, a = v.denominator, v.numerator
        if counts[v] % b:
            raise UnrealizableValuation(
                f"valuation {v} needs a multiple of {b} roots over Q, got {counts[v]}")
        for _ in range(counts[v] // b):
            poly *= x ** b - next(units) * sp.Rational(p) ** a
    P = sp.Poly(sp.expand(poly), x)
    terms = {(m[0],): Fraction(int(c.p), int(c.q)) for m, c in zip(P.monoms(), P.coeffs())}
    expected = sorted(((v, c) for v, c in counts.items()), key=lambda t: -t[0])
    return LiteralPolynomial(terms, Valuation("p-adic", p)), expected


# ---------------------------------------------------------------- resultants


def _coeff_val(valuation: Valuation, c) -> Fraction | float:
    if valuation.kind == "p-adic":
        c = sp.Rational(c)
        return padic_val(Fraction(int(c.p), int(c.q)), valuation.prime)
    return order_at_zero(c)


def _valuation_counts(expr, var, valuation: Valuation) -> dict[Fraction, int]:
    P = sp.Poly(expr, var)
    weights = {m[0]: _coeff_val(valuation, c) for m, c in zip(P.monoms(), P.coeffs())}
    out: dict[Fraction, int] = {}
    for v, L in np1d(weights):
        out[v] = out.get(v, 0) + L
    return out


def _strip(expr, var):
    """Drop factors of ``var``; roots at zero never reach the torus."""
    P = sp.Poly(expr, var)
    if P.is_zero:
        return P
    k = min(m[0] for m in P.monoms())
    return sp.Poly(sp.cancel(expr / var ** k), var)


def _eliminate(F1, F2, keep, drop, valuation: Valuation) -> dict[Fraction, int]:
    """Valuation counts of the ``keep``-coordinates of common torus zeros."""
    R = sp.cancel(sp.resultant(F1, F2, drop))
    if R == 0:
        raise NotFinite("the resultant vanishes identically")
    P1, P2 = sp.Poly(F1, drop), sp.Poly(F2, drop)
    lc = sp.gcd(P1.LC(), P2.LC())
    if _strip(lc, keep).degree() > 0:
        raise PairingAmbiguous("common zeros escape to infinity in the eliminated variable")
    z = sp.gcd(F1.subs(drop, 0), F2.subs(drop, 0))
    if z != 0 and _strip(z, keep).degree() > 0:
        raise PairingAmbiguous("common zeros on the coordinate axis of the eliminated variable")
    R = sp.numer(sp.together(R))
    return _valuation_counts(sp.expand(R), keep, valuation)


def _substituted(f: LiteralPolynomial, k: int):
    """``f(s * y^-k, y)`` as a polynomial in ``s`` and ``y``."""
    terms = {}
    for (a, b), c in f.terms.items():
        terms[(a, b - k * a)] = terms.get((a, b - k * a), 0) + c
    terms = {e: c for e, c in terms.items() if c != 0}
    return LiteralPolynomial(terms, f.valuation).to_sympy(_S, _Y)


def _check_pair(f1: LiteralPolynomial, f2: LiteralPolynomial) -> Valuation:
    if f1.n != 2 or f2.n != 2:
        raise InvalidInput("resultant counting needs two bivariate polynomials")
    if f1.valuation != f2.valuation:
        raise InvalidInput("the two polynomials use different valuations")
    return f1.valuation


def zero_valuations2(f1: LiteralPolynomial, f2: LiteralPolynomial) -> dict[tuple[Fraction, Fraction], int]:
    """Counts of common torus zeros by valuation vector, via resultants.

    Both marginals come from eliminating one variable.  The joint counts
    are read off through a monomial change ``x = s y^-k`` whose projection
    ``v1 + k v2`` separates all candidate pairs; a second separating ``k``
    must give the same answer.
    """
    val = _check_pair(f1, f2)
    F1, F2 = f1.to_sympy(_X, _Y), f2.to_sympy(_X, _Y)
    A = _eliminate(F1, F2, _X, _Y, val)
    B = _eliminate(F1, F2, _Y, _X, val)
    if sum(A.values()) != sum(B.values()):
        raise PairingAmbiguous("the two eliminations count different numbers of zeros")
    cands = list(itertools.product(sorted(A), sorted(B)))
    answers = []
    for k in (1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11):
        proj = [a + k * b for a, b in cands]
        if len(set(proj)) != len(proj):
            continue
        G1, G2 = _substituted(f1, k), _substituted(f2, k)
        try:
            Ck = _eliminate(G1, G2, _S, _Y, val)
        except PairingAmbiguous:
            continue
        table = {c: Ck.get(q, 0) for c, q in zip(cands, proj)}
        if sum(table.values()) != sum(Ck.values()):
            raise PairingAmbiguous(f"projection k={k} sees valuations outside the candidates")
        for a in A:
            if sum(m for (x, _), m in table.items() if x == a) != A[a]:
                raise PairingAmbiguous("joint counts disagree with the first marginal")
        for b in B:
            if sum(m for (_, y), m in table.items() if y == b) != B[b]:
                raise PairingAmbiguous("joint counts disagree with the second marginal")
        answers.append({c: m for c, m in table.items() if m})
        if len(answers) == 2:
            break
    if len(answers) < 2:
        raise PairingAmbiguous("no two separating projections found")
    if answers[0] != answers[1]:
        raise PairingAmbiguous("separating projections disagree")
    return answers[0]


def resultant_count2(f1: LiteralPolynomial, f2: LiteralPolynomial, v) -> int:
    """Common torus zeros with valuation vector ``v``, counted with multiplicity."""
    if getattr(v, "is_finite", True) is False:
        raise InvalidInput("the oracle only counts zeros in the torus")
    v = tuple(frac(x) for x in getattr(v, "coset", v))
    return zero_valuations2(f1, f2).get(v, 0)


# ---------------------------------------------------------------- linear example


def linear_solve_trop(f1: LiteralPolynomial, f2: LiteralPolynomial, fan):
    """Unique solution of two affine equations in P^2, tropicalised in N_R(Δ).

    The solution is the cross product ``[X:Y:Z]`` of the coefficient vectors
    ``(a, b, c)`` of ``a x + b y + c``.  A coordinate equal to zero sends the
    point to the boundary stratum of the corresponding ray of the
    projective-plane fan.  Returns ``(ExtendedPoint, 1)``.
    """
    from .fan import ExtendedPoint, coordinate_cone
    from .convex import Cone

    val = _check_pair(f1, f2)
    rows = []
    for f in (f1, f2):
        if any(e not in ((1, 0), (0, 1), (0, 0)) for e in f.terms):
            raise InvalidInput("linear_solve_trop needs affine polynomials")
        rows.append([sp.sympify(f.terms.get(e, 0)) for e in ((1, 0), (0, 1), (0, 0))])
    (a1, b1, c1), (a2, b2, c2) = rows
    X = sp.cancel(b1 * c2 - c1 * b2)
    Y = sp.cancel(c1 * a2 - a1 * c2)
    Z = sp.cancel(a1 * b2 - b1 * a2)
    if X == 0 and Y == 0 and Z == 0:
        raise DegenerateSystem("the two equations are dependent")
    vx, vy, vz = (_coeff_val(val, c) if c != 0 else INF for c in (X, Y, Z))
    gens = []
    if vx == INF:
        gens.append((1, 0))
    if vy == INF:
        gens.append((0, 1))
    if vz == INF:
        gens.append((-1, -1))
    fin = lambda q: Fraction(0) if q == INF else q
    rep = (fin(vx) - fin(vz), fin(vy) - fin(vz))
    tau = Cone.from_generators(gens, (), 2) if gens else Cone.zero(2)
    if tau not in fan:
        raise StratumNotInFan("the solution lies on a stratum outside the fan")
    return ExtendedPoint.at(tau, rep), 1


def nonproper_branches(p: int = 3) -> dict[str, tuple]:
    """The six choices of ``(alpha, beta)`` covering every case of the line example.

    For ``p >= 5`` a seventh, generic choice is added where ``alpha``, ``beta``,
    ``alpha - 1``, ``beta - 1`` and ``beta - alpha`` are all units.
    """
    big = p ** 5
    extra = {"generic": (2, 3)} if p >= 5 else {}
    return extra | {
        "ray_beta_minus_alpha": (2, 2 + big),
        "alpha_eq_beta": (2, 2),
        "ray_alpha_minus_one": (1 + big, 2),
        "alpha_one": (1, 2),
        "ray_beta_minus_one": (2, 1 + big),
        "beta_one": (2, 1),
    }


def line_pair(alpha, beta, valuation: Valuation = Valuation()) -> tuple[LiteralPolynomial, LiteralPolynomial]:
    f1 = LiteralPolynomial({(1, 0): 1, (0, 1): 1, (0, 0): 1}, valuation)
    f2 = LiteralPolynomial({(1, 0): alpha, (0, 1): beta, (0, 0): 1}, valuation)
    return f1, f2
