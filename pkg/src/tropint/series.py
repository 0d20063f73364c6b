"""Truncated convergent power series on a polyhedral domain.

A :class:`TruncatedSeries` keeps finitely many terms explicitly and a scalar
tail certificate ``T``: every omitted term has weight at least ``T`` at every
point of the domain.  All tropical information on the domain is then
decided by the retained terms, provided the retained minimum stays strictly
below ``T`` everywhere on the domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .convex import Polyhedron
from .errors import CertificateInsufficient, InvalidInput, NotPointed
from .linalg import dot, frac
from .lp import feasible_point, linprog
from .tropical import Exponent, TropicalPolynomial


@dataclass(frozen=True)
class TruncatedSeries:
    domain: Polyhedron
    terms: Mapping[Exponent, Fraction] = field(hash=False)
    tail_bound: Fraction

    def __post_init__(self):
        if not self.domain.is_pointed:
            raise NotPointed("series domains must be pointed")
        terms = {tuple(int(x) for x in e): frac(w) for e, w in dict(self.terms).items()}
        if not terms:
            raise InvalidInput("a series needs at least one retained term")
        n = self.domain.ambient_dim
        for e in terms:
            if len(e) != n:
                raise InvalidInput(f"exponent {e} has wrong length")
            for r in self.domain.rays:
                if dot(e, r) < 0:
                    raise InvalidInput(f"monomial {e} is unbounded below on the domain (ray {r})")
        object.__setattr__(self, "terms", dict(sorted(terms.items())))
        object.__setattr__(self, "tail_bound", frac(self.tail_bound))

    @property
    def n(self) -> int:
        return self.domain.ambient_dim

    def with_terms(self, extra: Mapping[Exponent, Fraction]) -> "TruncatedSeries":
        t = dict(self.terms)
        t.update(extra)
        return TruncatedSeries(self.domain, t, self.tail_bound)


def _max_retained_min(f: TruncatedSeries) -> Fraction | None:
    """``max over v in P of min_nu (w_nu + <nu, v>)``, or None when unbounded."""
    n = f.n
    # variables (v, s): maximise s with s <= w_nu + <nu, v> and v in P
    a_ub, b_ub = [], []
    for e, w in f.terms.items():
        a_ub.append(tuple(-x for x in e) + (1,))
        b_ub.append(w)
    for u, a in f.domain.halfspaces:
        a_ub.append(tuple(u) + (0,))
        b_ub.append(a)
    res = linprog((0,) * n + (1,), a_ub, b_ub, n=n + 1)
    if res.status == "unbounded":
        return None
    return res.value


def _certify(f: TruncatedSeries) -> Fraction:
    top = _max_retained_min(f)
    if top is None or top >= f.tail_bound:
        raise CertificateInsufficient(
            f"retained minimum reaches {('+inf' if top is None else top)} on the domain, "
            f"not below the tail bound {f.tail_bound}")
    return top


def vertices_on_P(f: TruncatedSeries) -> set[tuple[Exponent, Fraction]]:
    """Lifted points ``(nu, w_nu)`` that are minimisers somewhere on the domain."""
    _certify(f)
    n = f.n
    out = set()
    items = list(f.terms.items())
    dom_a = [u for u, _ in f.domain.halfspaces]
    dom_b = [a for _, a in f.domain.halfspaces]
    for e, w in items:
        a_ub, b_ub = list(dom_a), list(dom_b)
        for e2, w2 in items:
            if e2 == e:
                continue
            # w + <e, v> <= w2 + <e2, v>
            a_ub.append(tuple(a - b for a, b in zip(e, e2)))
            b_ub.append(w2 - w)
        if feasible_point(a_ub, b_ub, n=n) is not None:
            out.add((e, w))
    return out


def restrict_to_laurent(f: TruncatedSeries) -> TropicalPolynomial:
    """Polynomial made of exactly the terms that matter on the domain."""
    return TropicalPolynomial(dict(vertices_on_P(f)), n=f.n)


def min_weight(f: TruncatedSeries) -> Fraction:
    """Minimum tropical value over the domain (i.e. ``-log`` of the sup-norm)."""
    best = min(w + dot(e, v) for e, w in f.terms.items() for v in f.domain.vertex_list)
    if best >= f.tail_bound:
        raise CertificateInsufficient("retained minimum is not below the tail bound")
    return best


def stability_radius(f: TruncatedSeries) -> Fraction:
    """Threshold ``delta``: perturbations whose weight exceeds ``delta`` on the whole
    domain leave :func:`vertices_on_P` unchanged.

    ``delta`` is the maximum over the domain of the retained minimum; it is
    strictly below the tail bound whenever the certificate holds.
    """
    return _certify(f)
