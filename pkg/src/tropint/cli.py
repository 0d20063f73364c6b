"""Command-line entry point ``tropint``.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 the computation
was refused (not isolated, no generic translation, certificate too short,
infinitely many solutions, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import oracle as orc
from .convex import Polyhedron
from .errors import ComputationRefused, GenericityFailure, InvalidInput, TropintError
from .fan import Fan
from .intersect import (component_closure, components, point_multiplicity, stable_multiplicity,
                        stable_points)
from .linalg import frac
from .render import render_svg
from .serialize import (complex_doc, complex_from_doc, cone_doc, dumps, extended_point_doc, fparse,
                        fstr, hypersurface_doc, load_system, parse_json, polyhedron_doc,
                        polynomial_doc, vec_str)
from .series import min_weight, restrict_to_laurent, stability_radius, vertices_on_P
from .tropical import common_refinement, hypersurface, newton_fan

WORKERS_ENV = "TROPINT_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _pmap(fn, items):
    """Ordered map, parallel only when the worker cap is set above one."""
    try:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    except ValueError:
        workers = 1
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------- helpers


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror}") from None


def _system(args):
    if not args.input:
        raise UsageError("--input is required")
    return load_system(parse_json(_read(args.input), args.input))


def _poly(sysdoc, i):
    if not 0 <= i < len(sysdoc.polynomials):
        raise InvalidInput(f"--poly {i}: the document has {len(sysdoc.polynomials)} polynomials")
    return sysdoc.polynomials[i]


def _point(text: str):
    try:
        return tuple(frac(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"--point {text!r}: expected comma-separated rationals") from None


def _fan(sysdoc, idx) -> Fan:
    if idx is None:
        return common_refinement(*[newton_fan(f) for f in sysdoc.polynomials])
    if not 0 <= idx < len(sysdoc.fans):
        raise InvalidInput(f"--fan {idx}: the document has {len(sysdoc.fans)} fans")
    return sysdoc.fans[idx]


def _component(sysdoc, idx):
    cs = components(*sysdoc.polynomials)
    if not 0 <= idx < len(cs):
        raise InvalidInput(f"--component {idx}: the intersection has {len(cs)} components")
    return cs[idx]


def _dual_doc(P: Polyhedron) -> list[list[str]]:
    return [vec_str(v) for v in P.vertex_list]


def _cert_doc(cert: dict) -> dict:
    return {
        "epsilon": fstr(cert["epsilon"]),
        "relaxed_cells": [polyhedron_doc(R) for R in cert["relaxed_cells"]],
        "seeds": cert["seeds"],
        "runs": [{
            "seed": r["seed"],
            "directions": [list(d) for d in r["directions"]],
            "t": fstr(r["t"]),
            "multiplicity": r["multiplicity"],
            "points": [{"point": vec_str(p["point"]),
                        "dual_cells": [[list(e) for e in d] for d in p["dual_cells"]],
                        "multiplicity": p["multiplicity"]} for p in r["points"]],
            "rejected": r["rejected"],
        } for r in cert["runs"]],
    }


def report_doc(rep) -> dict:
    locus = rep.locus
    if hasattr(locus, "stratum"):
        locus = extended_point_doc(locus)
    else:
        locus = {"component": locus}
    out = {"locus": locus, "dual_cells": [_dual_doc(P) for P in rep.dual_cells],
           "multiplicity": rep.multiplicity}
    if rep.certificate is not None:
        out["certificate"] = _cert_doc(rep.certificate)
    return out


# ---------------------------------------------------------------- commands


def cmd_hypersurface(args):
    sysdoc = _system(args)
    return hypersurface_doc(hypersurface(_poly(sysdoc, args.poly)))


def cmd_components(args):
    sysdoc = _system(args)
    cs = components(*sysdoc.polynomials)
    return {"components": [{"index": C.index, "bounded": C.bounded,
                            "cells": [polyhedron_doc(c) for c in C.cells]} for C in cs]}


def _component_entry(job):
    polys, C, seed, checks = job
    if C.is_point:
        rep = point_multiplicity(*polys, v=C.point)
        return [{"component": C.index, "kind": "isolated", "point": vec_str(C.point),
                 "dual_cells": [_dual_doc(P) for P in rep.dual_cells],
                 "multiplicity": rep.multiplicity}]
    rep = stable_multiplicity(C, *polys, seed=seed, cross_checks=checks)
    pts = stable_points(C, *polys)
    if sum(p["multiplicity"] for p in pts) != rep.multiplicity:
        raise TropintError(f"component {C.index}: stable points do not add up to the stable multiplicity")
    return [{"component": C.index, "kind": "stable", "point": vec_str(p["point"]),
             "dual_cells": [_dual_doc(P) for P in p["dual_cells"]],
             "multiplicity": p["multiplicity"]} for p in pts]


def cmd_intersect(args):
    sysdoc = _system(args)
    polys = sysdoc.polynomials
    if args.point:
        return report_doc(point_multiplicity(*polys, v=_point(args.point)))
    cs = components(*polys)
    entries = _pmap(_component_entry, [(polys, C, args.seed, args.checks) for C in cs])
    points = [e for group in entries for e in group]
    return {"points": points, "total": sum(p["multiplicity"] for p in points)}


def cmd_stable(args):
    sysdoc = _system(args)
    C = _component(sysdoc, args.component)
    rep = stable_multiplicity(C, *sysdoc.polynomials, seed=args.seed, cross_checks=args.checks)
    return report_doc(rep)


def cmd_closure(args):
    sysdoc = _system(args)
    C = _component(sysdoc, args.component)
    fan = _fan(sysdoc, args.fan)
    cl = component_closure(C, fan, sysdoc.polynomials)
    return {
        "component": C.index,
        "strata": [{"cone": cone_doc(tau), "cells": [polyhedron_doc(c) for c in cells]}
                   for tau, cells in cl.strata.items()],
        "boundary_points": [extended_point_doc(p) for p in cl.boundary_points()],
    }


def cmd_np1d(args):
    sysdoc = _system(args)
    f = _poly(sysdoc, args.poly)
    if f.n != 1:
        raise InvalidInput("np1d needs a one-variable polynomial")
    return {"segments": [{"valuation": fstr(v), "length": L} for v, L in orc.np1d(f)]}


def cmd_series(args):
    sysdoc = _system(args)
    if not 0 <= args.series < len(sysdoc.series):
        raise InvalidInput(f"--series {args.series}: the document has {len(sysdoc.series)} series")
    f = sysdoc.series[args.series]
    verts = sorted(vertices_on_P(f))
    return {
        "vertices": [{"exp": list(e), "val": fstr(w)} for e, w in verts],
        "restricted": polynomial_doc(restrict_to_laurent(f)),
        "min_weight": fstr(min_weight(f)),
        "stability_threshold": fstr(stability_radius(f)),
    }


def cmd_oracle(args):
    if args.task == "np1d-roots":
        if args.valuations is None or args.prime is None:
            raise UsageError("np1d-roots needs --valuations and --prime")
        vals = [v for v in args.valuations.split(",") if v.strip()]
        lit, expected = orc.known_root_instance([fparse(v.strip()) for v in vals], args.prime)
        got = orc.np1d(lit)
        return {"polynomial": [{"exp": list(e), "coeff": fstr(c)} for e, c in lit.terms.items()],
                "expected": [{"valuation": fstr(v), "length": L} for v, L in expected],
                "np1d": [{"valuation": fstr(v), "length": L} for v, L in got],
                "agree": sorted(got) == sorted(expected)}
    sysdoc = _system(args)
    lits = sysdoc.literals[:2]
    if len(lits) < 2 or any(l is None for l in lits):
        raise InvalidInput("the oracle needs two polynomials given by coefficients")
    if args.task == "resultant2":
        if not args.point:
            raise UsageError("resultant2 needs --point")
        v = _point(args.point)
        return {"point": vec_str(v), "count": orc.resultant_count2(lits[0], lits[1], v)}
    fan = _fan(sysdoc, args.fan)
    pt, count = orc.linear_solve_trop(lits[0], lits[1], fan)
    return {"point": extended_point_doc(pt), "count": count}


def cmd_render(args):
    if not args.input or not args.output:
        raise UsageError("render needs --input and --output")
    cx, _ = complex_from_doc(parse_json(_read(args.input), args.input))
    svg = render_svg(cx, ray_length=fparse(args.svg_ray_length), fill=not args.no_fill)
    Path(args.output).write_text(svg, encoding="utf-8")
    return None


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropint", description="Exact tropical hypersurfaces and intersection multiplicities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, poly=False):
        sp.add_argument("--input", help="system document (JSON), '-' for stdin")
        sp.add_argument("--output", help="write the result here instead of stdout")
        if poly:
            sp.add_argument("--poly", type=int, default=0, help="polynomial index")
        return sp

    common(sub.add_parser("hypersurface", help="cells and dual cells of one hypersurface"), poly=True)
    common(sub.add_parser("components", help="connected components of the intersection"))
    sp = common(sub.add_parser("intersect", help="point multiplicities"))
    sp.add_argument("--point", help="comma-separated rationals; omit to report every component")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--checks", type=int, default=5)
    sp = common(sub.add_parser("stable", help="stable multiplicity along a component"))
    sp.add_argument("--component", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--checks", type=int, default=5)
    sp = common(sub.add_parser("closure", help="closure of a component in the toric completion"))
    sp.add_argument("--component", type=int, default=0)
    sp.add_argument("--fan", type=int, help="fan index in the document (default: common Newton fan)")
    common(sub.add_parser("np1d", help="Newton polygon of a one-variable polynomial"), poly=True)
    sp = common(sub.add_parser("series", help="truncated series on a polyhedral domain"))
    sp.add_argument("--series", type=int, default=0)
    sp = common(sub.add_parser("oracle", help="independent checks"))
    sp.add_argument("task", choices=["np1d-roots", "resultant2", "linear2"])
    sp.add_argument("--valuations", help="comma-separated root valuations (np1d-roots)")
    sp.add_argument("--prime", type=int)
    sp.add_argument("--point")
    sp.add_argument("--fan", type=int)
    sp = common(sub.add_parser("render", help="SVG picture of a complex document"))
    sp.add_argument("--svg-ray-length", default="3")
    sp.add_argument("--no-fill", action="store_true")
    return p


COMMANDS = {
    "hypersurface": cmd_hypersurface,
    "components": cmd_components,
    "intersect": cmd_intersect,
    "stable": cmd_stable,
    "closure": cmd_closure,
    "np1d": cmd_np1d,
    "series": cmd_series,
    "oracle": cmd_oracle,
    "render": cmd_render,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"tropint: {exc}", file=sys.stderr)
        return 1
    except InvalidInput as exc:
        print(f"tropint: invalid input: {exc}", file=sys.stderr)
        return 2
    except GenericityFailure as exc:
        print(f"tropint: refused: {exc}", file=sys.stderr)
        print(json.dumps({"retry_log": exc.log}, indent=2), file=sys.stderr)
        return 3
    except (ComputationRefused, TropintError) as exc:
        print(f"tropint: refused: {exc}", file=sys.stderr)
        return 3
    if result is not None:
        text = dumps(result)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
