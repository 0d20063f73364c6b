#!/usr/bin/env python3
"""Two lines with the same tropicalization: where do the classical intersections go?

Each branch picks coefficients a, b so that the unique intersection point of
x + y + 1 and a*x + b*y + 1 tropicalizes to a different part of the closure
of the common tropical line in the projective plane.
"""

import argparse

from tropint.fan import Fan
from tropint.intersect import component_closure, components, stable_multiplicity
from tropint.oracle import Valuation, line_pair, linear_solve_trop, nonproper_branches

P2 = Fan.from_generators([[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]])


def fmt(v):
    return "(" + ", ".join(map(str, v)) + ")"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    val = Valuation("p-adic", args.prime)
    f = None
    for name, (a, b) in nonproper_branches(args.prime).items():
        g1, g2 = line_pair(a, b, val)
        f = g1.to_tropical()
        pt, count = linear_solve_trop(g1, g2, P2)
        where = "torus" if pt.is_finite else f"stratum {pt.stratum.rays}"
        print(f"{name:24s} a={a!s:>8} b={b!s:>8}  {where}  coset={fmt(pt.coset)}  count={count}")

    C = components(f, f)[0]
    rep = stable_multiplicity(C, f, f, seed=args.seed)
    cl = component_closure(C, P2, (f, f))
    print(f"stable multiplicity {rep.multiplicity}")
    for p in cl.boundary_points():
        print(f"closure meets stratum {p.stratum.rays} at {fmt(p.coset)}")


if __name__ == "__main__":
    main()
