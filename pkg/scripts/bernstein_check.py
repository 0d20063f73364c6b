#!/usr/bin/env python3
"""Random bivariate systems: sum of tropical multiplicities against the mixed volume.

For systems whose intersection is finite the isolated multiplicities add up
to the mixed volume of the Newton polygons.  Non-finite draws are skipped
and counted.
"""

import argparse
import random
from dataclasses import dataclass

from tropint.convex import Polyhedron, mixed_volume
from tropint.instances import PolynomialConfig, random_tropical_polynomial
from tropint.intersect import components, point_multiplicity


@dataclass(frozen=True)
class BernsteinConfig:
    count: int = 50
    seed: int = 0
    poly: PolynomialConfig = PolynomialConfig(max_exponent=3, max_weight=6, denominator=3)


def check(cfg: BernsteinConfig):
    rng = random.Random(cfg.seed)
    done = skipped = bad = 0
    while done < cfg.count:
        f1 = random_tropical_polynomial(rng, cfg.poly, full_dimensional=True)
        f2 = random_tropical_polynomial(rng, cfg.poly, full_dimensional=True)
        cs = components(f1, f2)
        if not all(C.is_point for C in cs):
            skipped += 1
            continue
        total = sum(point_multiplicity(f1, f2, v=C.point).multiplicity for C in cs)
        mv = mixed_volume(*(Polyhedron.from_points(list(f.terms)) for f in (f1, f2)))
        if total != mv:
            bad += 1
            print(f"mismatch: {f1.terms} / {f2.terms}: {total} vs {mv}")
        done += 1
    return done, skipped, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    done, skipped, bad = check(BernsteinConfig(args.count, args.seed))
    print(f"{done} systems checked, {skipped} non-finite draws skipped, {bad} mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
