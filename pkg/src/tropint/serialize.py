"""JSON documents: system input, complex output, and exact number encoding.

Rationals are written as strings ``"a/b"`` (``"a"`` for integers) and
infinity as ``"inf"``; integer vectors (exponents, normals, rays) stay JSON
integers.  Output is canonical: cells in their sorted order, keys sorted.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import jsonschema

from .convex import Cone, PolyhedralComplex, Polyhedron
from .errors import DimensionMismatch, InvalidInput
from .fan import ExtendedPoint, Fan
from .linalg import frac
from .oracle import LiteralPolynomial, Valuation
from .series import TruncatedSeries
from .tropical import TropicalHypersurface, TropicalPolynomial

RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*-?\d+)?\s*$"}
INTVEC = {"type": "array", "items": {"type": "integer"}}

TERM = {
    "type": "object",
    "properties": {"exp": INTVEC, "coeff": {"type": "string"}, "val": RATIONAL},
    "required": ["exp"],
    "oneOf": [{"required": ["coeff"]}, {"required": ["val"]}],
    "additionalProperties": False,
}

HALFSPACE = {
    "type": "object",
    "properties": {"normal": INTVEC, "offset": RATIONAL},
    "required": ["normal", "offset"],
    "additionalProperties": False,
}

SYSTEM_SCHEMA = {
    "type": "object",
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "valuation": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["p-adic", "parameter", "explicit"]},
                "prime": {"type": "integer", "minimum": 2},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
        "polynomials": {"type": "array", "items": {"type": "array", "items": TERM, "minItems": 1}},
        "series": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "terms": {"type": "array", "items": TERM, "minItems": 1},
                    "domain": {"type": "array", "items": HALFSPACE},
                    "tail_bound": RATIONAL,
                },
                "required": ["terms", "domain", "tail_bound"],
                "additionalProperties": False,
            },
        },
        "fans": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"cones": {"type": "array", "items": {"type": "array", "items": INTVEC}}},
                "required": ["cones"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["dim", "polynomials"],
    "additionalProperties": False,
}


# ---------------------------------------------------------------- numbers


def fstr(x) -> str:
    if x == math.inf:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fparse(s) -> Fraction | float:
    if s == "inf":
        return math.inf
    return frac(s.replace(" ", "") if isinstance(s, str) else s)


def vec_str(v) -> list[str]:
    return [fstr(x) for x in v]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- systems


@dataclass
class SystemDocument:
    dim: int
    valuation: dict
    polynomials: list[TropicalPolynomial]
    literals: list[LiteralPolynomial | None]
    series: list[TruncatedSeries] = field(default_factory=list)
    fans: list[Fan] = field(default_factory=list)


def _path(err) -> str:
    return "/".join(str(p) for p in err.absolute_path) or "<root>"


def _valuation(cfg: dict) -> Valuation | None:
    kind = cfg.get("kind", "explicit")
    if kind == "explicit":
        return None
    if kind == "p-adic":
        if "prime" not in cfg:
            raise InvalidInput("valuation: p-adic model needs a prime")
        return Valuation("p-adic", cfg["prime"])
    return Valuation("parameter")


def _poly_from_terms(terms: list[dict], dim: int, val: Valuation | None, where: str):
    kinds = {"coeff" in t for t in terms}
    if len(kinds) > 1:
        raise InvalidInput(f"{where}: coeff and val terms are mixed")
    for j, t in enumerate(terms):
        if len(t["exp"]) != dim:
            raise DimensionMismatch(f"{where}/{j}/exp: expected {dim} entries, got {len(t['exp'])}")
    if kinds == {True}:
        if val is None:
            raise InvalidInput(f"{where}: coefficients need a p-adic or parameter valuation")
        lit = LiteralPolynomial({tuple(t["exp"]): t["coeff"] for t in terms}, val)
        return lit.to_tropical(), lit
    weights = {}
    for j, t in enumerate(terms):
        e = tuple(t["exp"])
        if e in weights:
            raise InvalidInput(f"{where}/{j}/exp: repeated exponent {list(e)}")
        weights[e] = fparse(t["val"])
    return TropicalPolynomial(weights, n=dim), None


def load_system(doc: Any) -> SystemDocument:
    """Validate and convert a system document (already parsed JSON)."""
    try:
        jsonschema.validate(doc, SYSTEM_SCHEMA)
    except jsonschema.ValidationError as err:
        raise InvalidInput(f"{_path(err)}: {err.message}") from None
    dim = doc["dim"]
    cfg = doc.get("valuation", {"kind": "explicit"})
    val = _valuation(cfg)
    polys, lits = [], []
    for i, terms in enumerate(doc["polynomials"]):
        f, lit = _poly_from_terms(terms, dim, val, f"polynomials/{i}")
        polys.append(f)
        lits.append(lit)
    series = []
    for i, blk in enumerate(doc.get("series", [])):
        f, _ = _poly_from_terms(blk["terms"], dim, val, f"series/{i}/terms")
        hs = []
        for j, h in enumerate(blk["domain"]):
            if len(h["normal"]) != dim:
                raise DimensionMismatch(f"series/{i}/domain/{j}/normal: expected {dim} entries")
            hs.append((h["normal"], fparse(h["offset"])))
        P = Polyhedron(hs, dim)
        series.append(TruncatedSeries(P, f.terms, fparse(blk["tail_bound"])))
    fans = []
    for i, blk in enumerate(doc.get("fans", [])):
        for j, gens in enumerate(blk["cones"]):
            if any(len(g) != dim for g in gens):
                raise DimensionMismatch(f"fans/{i}/cones/{j}: generators must have {dim} entries")
        fan = Fan.from_generators(blk["cones"], dim)
        if not fan.is_valid():
            raise InvalidInput(f"fans/{i}: the cones do not form a fan")
        fans.append(fan)
    return SystemDocument(dim, cfg, polys, lits, series, fans)


def parse_json(text: str, name: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidInput(f"{name}:{err.lineno}:{err.colno}: {err.msg}") from None


# ---------------------------------------------------------------- polyhedra and complexes


def polyhedron_doc(P: Polyhedron) -> dict:
    return {
        "dim": P.dim,
        "halfspaces": [{"normal": list(u), "offset": fstr(a)} for u, a in P.halfspaces],
        "vertices": [vec_str(v) for v in P.vertex_list],
        "rays": [list(r) for r in P.rays],
        "lines": [list(l) for l in P.lines],
    }


def polyhedron_from_doc(d: dict, n: int) -> Polyhedron:
    hs = [(h["normal"], fparse(h["offset"])) for h in d["halfspaces"]]
    verts = [tuple(fparse(x) for x in v) for v in d["vertices"]]
    P = Polyhedron(hs, n, vrep=(verts, [tuple(r) for r in d["rays"]], [tuple(l) for l in d["lines"]]))
    return P


def complex_doc(cx: PolyhedralComplex, duals: dict | None = None) -> dict:
    cells = []
    for c in cx.cells:
        d = polyhedron_doc(c)
        if duals is not None and c in duals:
            d["dual"] = {"vertices": [vec_str(v) for v in duals[c].vertex_list]}
        cells.append(d)
    return {"type": "complex", "ambient_dim": cx.ambient_dim, "cells": cells}


def hypersurface_doc(H: TropicalHypersurface) -> dict:
    return complex_doc(H.complex, H.dual_cells)


def complex_from_doc(d: dict) -> tuple[PolyhedralComplex, dict]:
    if d.get("type") != "complex" or "cells" not in d or "ambient_dim" not in d:
        raise InvalidInput("not a complex document")
    n = d["ambient_dim"]
    cells, duals = [], {}
    for c in d["cells"]:
        P = polyhedron_from_doc(c, n)
        cells.append(P)
        if "dual" in c:
            duals[P] = Polyhedron.from_points([tuple(fparse(x) for x in v) for v in c["dual"]["vertices"]],
                                              ambient_dim=n)
    return PolyhedralComplex(cells, n, close=False), duals


def extended_point_doc(p: ExtendedPoint) -> dict:
    return {"stratum": [list(r) for r in p.stratum.rays], "coset": vec_str(p.coset)}


def cone_doc(c: Cone) -> list[list[int]]:
    return [list(r) for r in c.rays]


def polynomial_doc(f: TropicalPolynomial) -> list[dict]:
    return [{"exp": list(e), "val": fstr(w)} for e, w in f.terms.items()]
