"""Double description method for polyhedral cones over Z.

A cone is handled as ``{y : a . y <= 0 for a in constraints}``; the output is
a minimal generating pair (extreme rays, lineality basis).  Polyhedra are
converted in both directions through homogenisation, so one routine serves
H -> V and V -> H.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .linalg import dot, fvec, primitive


def _int_row(v: Sequence) -> tuple[int, ...]:
    fv = fvec(v)
    den = 1
    for a in fv:
        den = lcm(den, a.denominator)
    return tuple(int(a * den) for a in fv)


def cone_generators(constraints: Sequence[Sequence], d: int):
    """Extreme rays and lineality basis of ``{y in R^d : a.y <= 0}``.

    Returns ``(rays, lineality)`` as lists of primitive integer vectors.
    """
    lin: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[tuple[tuple[int, ...], frozenset]] = []
    for idx, a in enumerate(_int_row(c) for c in constraints):
        pair = [(l, dot(a, l)) for l in lin]
        hit = next((k for k, (_, s) in enumerate(pair) if s != 0), None)
        if hit is not None:
            l0, s = pair[hit]
            if s > 0:
                l0, s = tuple(-x for x in l0), -s
            new_lin = []
            for k, (l, sl) in enumerate(pair):
                if k == hit:
                    continue
                v = primitive(tuple(-s * x + sl * y for x, y in zip(l, l0)))
                if any(v):
                    new_lin.append(v)
            new_rays = []
            for r, z in rays:
                sr = dot(a, r)
                v = primitive(tuple(-s * x + sr * y for x, y in zip(r, l0)))
                new_rays.append((v, z | {idx}))
            new_rays.append((primitive(l0), frozenset(range(idx))))
            lin = new_lin
            rays = new_rays
            continue

        pos, neg, zero = [], [], []
        for r, z in rays:
            s = dot(a, r)
            if s > 0:
                pos.append((r, z, s))
            elif s < 0:
                neg.append((r, z, s))
            else:
                zero.append((r, z | {idx}))
        new = list(zero) + [(r, z) for r, z, _ in neg]
        if pos and neg:
            all_z = [z for _, z in rays]
            for rp, zp, sp in pos:
                for rn, zn, sn in neg:
                    common = zp & zn
                    adjacent = True
                    for z in all_z:
                        if z is zp or z is zn:
                            continue
                        if common <= z:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    v = primitive(tuple(sp * x - sn * y for x, y in zip(rn, rp)))
                    if any(v):
                        new.append((v, common | {idx}))
        seen = set()
        rays = []
        for r, z in new:
            if r not in seen:
                seen.add(r)
                rays.append((r, z))
    return [r for r, _ in rays], lin


def h_to_v(halfspaces: Sequence[tuple[Sequence, Fraction]], n: int):
    """V-representation of ``{x : u.x <= a}``.

    Returns ``(vertices, rays, lineality)`` or ``None`` if the system is
    infeasible.  Vertices are rational; rays and lineality primitive integral.
    """
    cons = [tuple(fvec(u)) + (-Fraction(a),) for u, a in halfspaces]
    cons.append(tuple([0] * n) + (-1,))
    rays, lin = cone_generators(cons, n + 1)
    verts, recs = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            verts.append(tuple(Fraction(x, t) for x in r[:-1]))
        else:
            recs.append(primitive(r[:-1]))
    if not verts:
        return None
    lines = [primitive(l[:-1]) for l in lin]
    return verts, recs, lines


def v_to_h(points, rays=(), lines=(), n: int | None = None):
    """Facet inequalities and equations of conv(points) + cone(rays) + span(lines).

    Returns ``(inequalities, equations)``, each a list of ``(normal, offset)``
    with primitive integer normals; inequalities mean ``u.x <= a`` and
    equations ``u.x = a``.
    """
    if n is None:
        n = len(points[0])
    gens = [tuple(fvec(p)) + (Fraction(1),) for p in points]
    gens += [tuple(fvec(r)) + (Fraction(0),) for r in rays]
    for l in lines:
        gens.append(tuple(fvec(l)) + (Fraction(0),))
        gens.append(tuple(-x for x in fvec(l)) + (Fraction(0),))
    drays, dlin = cone_generators(gens, n + 1)
    ineqs, eqs = [], []
    for y in drays:
        u = y[:-1]
        if not any(u):
            continue
        ineqs.append((tuple(u), Fraction(-y[-1])))
    for y in dlin:
        u = y[:-1]
        if not any(u):
            continue
        eqs.append((tuple(u), Fraction(-y[-1])))
    return ineqs, eqs
