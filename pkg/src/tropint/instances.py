"""Seeded random instances for the property suites and the scripts.

Every generator takes a :class:`random.Random` so that a run is fixed by a
single integer seed.  The dataclass configs carry the size knobs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .convex import Polyhedron
from .oracle import LiteralPolynomial, Valuation
from .series import TruncatedSeries, _max_retained_min
from .tropical import TropicalPolynomial


@dataclass(frozen=True)
class PolynomialConfig:
    n: int = 2
    min_terms: int = 3
    max_terms: int = 6
    max_exponent: int = 3
    max_weight: int = 4
    denominator: int = 1


@dataclass(frozen=True)
class SystemConfig:
    max_terms: int = 5
    max_exponent: int = 2
    prime: int = 3
    max_power: int = 2
    units: tuple[int, ...] = (1, 2, -1, -2, 4, 5, -5, 7)


@dataclass(frozen=True)
class RootConfig:
    max_degree: int = 12
    primes: tuple[int, ...] = (2, 3, 5)
    max_numerator: int = 6


@dataclass(frozen=True)
class SeriesConfig:
    n: int = 2
    max_terms: int = 5
    max_exponent: int = 3
    box: int = 3
    max_weight: int = 6


# ---------------------------------------------------------------- tropical polynomials


def random_exponents(rng: random.Random, n: int, count: int, max_exponent: int) -> list[tuple[int, ...]]:
    pool = set()
    while len(pool) < count:
        pool.add(tuple(rng.randint(0, max_exponent) for _ in range(n)))
    return sorted(pool)


def random_tropical_polynomial(rng: random.Random, cfg: PolynomialConfig = PolynomialConfig(),
                               full_dimensional: bool = False) -> TropicalPolynomial:
    """Random polynomial; with ``full_dimensional`` the Newton polytope has dimension n."""
    while True:
        k = rng.randint(cfg.min_terms, cfg.max_terms)
        exps = random_exponents(rng, cfg.n, k, cfg.max_exponent)
        d = cfg.denominator
        f = TropicalPolynomial({e: Fraction(rng.randint(0, cfg.max_weight * d), d) for e in exps}, n=cfg.n)
        if not full_dimensional or Polyhedron.from_points(exps).dim == cfg.n:
            return f


def random_lattice_polytope(rng: random.Random, n: int, max_points: int = 5, box: int = 3) -> Polyhedron:
    k = rng.randint(1, max_points)
    pts = [tuple(rng.randint(-box, box) for _ in range(n)) for _ in range(k)]
    return Polyhedron.from_points(pts, ambient_dim=n)


def random_segment(rng: random.Random, n: int, box: int = 3) -> Polyhedron:
    a = tuple(rng.randint(-box, box) for _ in range(n))
    d = tuple(rng.randint(-box, box) for _ in range(n))
    return Polyhedron.from_points([a, tuple(x + y for x, y in zip(a, d))], ambient_dim=n)


def random_nonproper_pair(rng: random.Random, cfg: PolynomialConfig = PolynomialConfig(
        min_terms=3, max_terms=5, max_exponent=2, max_weight=3)):
    """Two plane polynomials sharing two terms of the first, so that the curves
    tend to share a segment or a ray.  Returns ``(f1, f2)``; the caller checks
    that the intersection really has a positive-dimensional component."""
    while True:
        f1 = random_tropical_polynomial(rng, cfg, full_dimensional=True)
        keep = rng.sample(list(f1.terms), 2)
        terms = {e: f1.terms[e] for e in keep}
        for e in random_exponents(rng, 2, rng.randint(1, 2), cfg.max_exponent):
            terms.setdefault(e, Fraction(rng.randint(0, 2 * cfg.max_weight)))
        if Polyhedron.from_points(list(terms)).dim == 2:
            return f1, TropicalPolynomial(terms, n=2)


# ---------------------------------------------------------------- literal systems


def random_literal(rng: random.Random, cfg: SystemConfig = SystemConfig()) -> LiteralPolynomial:
    val = Valuation("p-adic", cfg.prime)
    k = rng.randint(2, cfg.max_terms)
    exps = random_exponents(rng, 2, k, cfg.max_exponent)
    terms = {}
    for e in exps:
        c = Fraction(rng.choice(cfg.units)) * Fraction(cfg.prime) ** rng.randint(-1, cfg.max_power)
        terms[e] = str(c)
    return LiteralPolynomial(terms, val)


def random_literal_system(rng: random.Random, cfg: SystemConfig = SystemConfig()):
    """Two bivariate polynomials whose Newton polytopes are both two-dimensional."""
    while True:
        f1, f2 = random_literal(rng, cfg), random_literal(rng, cfg)
        if all(Polyhedron.from_points(list(f.terms)).dim == 2 for f in (f1, f2)):
            return f1, f2


# ---------------------------------------------------------------- 1-D root instances


def random_root_valuations(rng: random.Random, cfg: RootConfig = RootConfig()) -> tuple[list, int]:
    """A realisable valuation multiset of total size at most ``max_degree``, and a prime."""
    p = rng.choice(cfg.primes)
    budget = rng.randint(1, cfg.max_degree)
    vals: list = []
    while budget > 0:
        b = rng.choice([1, 1, 1, 2, 3])
        if b > budget:
            b = 1
        a = rng.randint(-cfg.max_numerator, cfg.max_numerator)
        blocks = rng.randint(1, max(1, budget // b))
        vals.extend([Fraction(a, b)] * (b * blocks))
        budget -= b * blocks
    return vals, p


# ---------------------------------------------------------------- series


def random_series(rng: random.Random, cfg: SeriesConfig = SeriesConfig()) -> TruncatedSeries:
    """Random series on a box in the positive orthant with a certified tail bound."""
    n = cfg.n
    lo = [rng.randint(0, cfg.box) for _ in range(n)]
    hi = [x + rng.randint(1, cfg.box) for x in lo]
    P = Polyhedron.box(lo, hi)
    k = rng.randint(1, cfg.max_terms)
    exps = random_exponents(rng, n, k, cfg.max_exponent)
    terms = {e: Fraction(rng.randint(-cfg.max_weight, cfg.max_weight), rng.randint(1, 3)) for e in exps}
    probe = TruncatedSeries(P, terms, Fraction(10**9))
    top = _max_retained_min(probe)
    return TruncatedSeries(P, terms, top + rng.randint(1, 4))

