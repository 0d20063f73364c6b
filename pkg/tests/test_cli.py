import json
import subprocess
import sys

import pytest
from hypothesis import given

from tropint.cli import main
from tropint.serialize import complex_doc, complex_from_doc, dumps, hypersurface_doc
from tropint.tropical import hypersurface

from conftest import DATA, FIXTURES, tropical_polynomials


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc, encoding="utf-8")
    return str(p)


# ---------------------------------------------------------------- hypersurface


def test_hypersurface_tropical_line(capsys):
    code, out, _ = run(capsys, "hypersurface", "--input", str(DATA / "tropical_line.json"))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["cells"]) == 4
    assert out == (FIXTURES / "tropical_line_complex.json").read_text(encoding="utf-8")


def test_hypersurface_monomial(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"dim": 2, "polynomials": [[{"exp": [1, 2], "val": "3"}]]})
    code, out, _ = run(capsys, "hypersurface", "--input", path)
    assert code == 0 and json.loads(out)["cells"] == []


def test_bad_exponent_arity(tmp_path, capsys):
    path = write(tmp_path, "bad.json", {"dim": 2, "polynomials": [[{"exp": [1], "val": "0"}]]})
    code, _, err = run(capsys, "hypersurface", "--input", path)
    assert code == 2
    assert "polynomials/0/0/exp" in err


def test_schema_violation_and_bad_json(tmp_path, capsys):
    path = write(tmp_path, "bad.json", {"dim": 2, "polynomials": [[{"exp": [1, 0], "val": "x"}]]})
    code, _, err = run(capsys, "hypersurface", "--input", path)
    assert code == 2 and "polynomials/0/0/val" in err
    path = write(tmp_path, "broken.json", '{"dim": 2,\n "polynomials": [}')
    code, _, err = run(capsys, "hypersurface", "--input", path)
    assert code == 2 and "broken.json:2:" in err


def test_mixed_terms_rejected(tmp_path, capsys):
    doc = {"dim": 1, "valuation": {"kind": "p-adic", "prime": 3},
           "polynomials": [[{"exp": [0], "val": "0"}, {"exp": [1], "coeff": "3"}]]}
    code, _, err = run(capsys, "hypersurface", "--input", write(tmp_path, "mix.json", doc))
    assert code == 2 and "mixed" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "hypersurface")[0] == 1
    assert run(capsys, "oracle", "np1d-roots")[0] == 1


# ---------------------------------------------------------------- intersections


@pytest.mark.parametrize("p,iso,stable", [(3, 2, 6), (5, 4, 20)])
def test_intersect_multeg(capsys, p, iso, stable):
    code, out, _ = run(capsys, "intersect", "--input", str(DATA / f"multeg_p{p}.json"))
    assert code == 0
    doc = json.loads(out)
    got = {(tuple(x["point"]), x["kind"]): x["multiplicity"] for x in doc["points"]}
    assert got == {(("0", "0"), "stable"): stable, ((f"1/{p - 1}", f"{p}/{p - 1}"), "isolated"): iso}
    assert doc["total"] == p * p - 1


def test_intersect_point_refusals(capsys):
    code, _, err = run(capsys, "intersect", "--input", str(DATA / "multeg_p3.json"), "--point", "0,0")
    assert code == 3 and "refused" in err
    code, out, _ = run(capsys, "intersect", "--input", str(DATA / "multeg_p3.json"), "--point", "1/2,3/2")
    assert code == 0 and json.loads(out)["multiplicity"] == 2
    code, _, _ = run(capsys, "intersect", "--input", str(DATA / "multeg_p3.json"), "--point", "a,b")
    assert code == 2


def test_stable_nonproper(capsys):
    code, out, _ = run(capsys, "stable", "--input", str(DATA / "nonproper.json"), "--seed", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["multiplicity"] == 1
    assert len(doc["certificate"]["seeds"]) == 5
    assert all(r["multiplicity"] == 1 for r in doc["certificate"]["runs"])


def test_stable_isolated_component_matches_intersect(capsys):
    _, out, _ = run(capsys, "stable", "--input", str(DATA / "multeg_p3.json"), "--component", "1")
    stable = json.loads(out)
    _, out, _ = run(capsys, "intersect", "--input", str(DATA / "multeg_p3.json"), "--point", "1/2,3/2")
    point = json.loads(out)
    assert stable["multiplicity"] == point["multiplicity"] == 2
    assert stable["dual_cells"] == point["dual_cells"]


def test_closure_nonproper(capsys):
    code, out, _ = run(capsys, "closure", "--input", str(DATA / "nonproper.json"), "--fan", "0")
    assert code == 0
    pts = json.loads(out)["boundary_points"]
    assert len(pts) == 3
    assert sorted(tuple(p["stratum"][0]) for p in pts) == [(-1, -1), (0, 1), (1, 0)]


def test_components_listing(capsys):
    code, out, _ = run(capsys, "components", "--input", str(DATA / "multeg_p3.json"))
    assert code == 0
    assert len(json.loads(out)["components"]) == 2


# ---------------------------------------------------------------- one-variable tools


def test_np1d_command(capsys):
    code, out, _ = run(capsys, "np1d", "--input", str(DATA / "roots_1d.json"))
    assert code == 0
    assert json.loads(out)["segments"] == [{"valuation": "1", "length": 1}, {"valuation": "0", "length": 1}]


def test_series_command(capsys):
    code, out, _ = run(capsys, "series", "--input", str(DATA / "series_squares.json"))
    assert code == 0
    doc = json.loads(out)
    assert [v["exp"] for v in doc["vertices"]] == [[0], [1], [2]]
    assert doc["stability_threshold"] == "0"


def test_oracle_commands(capsys):
    code, out, _ = run(capsys, "oracle", "np1d-roots", "--valuations", "1/2,1/2,3,-1", "--prime", "5")
    assert code == 0 and json.loads(out)["agree"] is True
    code, out, _ = run(capsys, "oracle", "resultant2", "--input", str(DATA / "multeg_p3.json"),
                       "--point", "1/2,3/2")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "oracle", "linear2", "--input", str(DATA / "nonproper.json"), "--fan", "0")
    assert code == 0 and json.loads(out)["count"] == 1


# ---------------------------------------------------------------- rendering


def test_render_golden_svg(tmp_path, capsys):
    out = tmp_path / "line.svg"
    code, _, _ = run(capsys, "render", "--input", str(FIXTURES / "tropical_line_complex.json"),
                     "--output", str(out))
    assert code == 0
    svg = out.read_text(encoding="utf-8")
    assert svg == (FIXTURES / "tropical_line.svg").read_text(encoding="utf-8")
    assert svg.count("<line ") == 3 and svg.count("<circle ") == 1


def test_render_empty_and_wrong_dimension(tmp_path, capsys):
    empty = write(tmp_path, "e.json", {"type": "complex", "ambient_dim": 2, "cells": []})
    out = tmp_path / "e.svg"
    assert run(capsys, "render", "--input", empty, "--output", str(out))[0] == 0
    assert "<line" not in out.read_text() and "<svg" in out.read_text()
    three = write(tmp_path, "t.json", {"type": "complex", "ambient_dim": 3, "cells": []})
    assert run(capsys, "render", "--input", three, "--output", str(tmp_path / "t.svg"))[0] == 2


# ---------------------------------------------------------------- stability of outputs


def test_complex_round_trip():
    text = (FIXTURES / "tropical_line_complex.json").read_text(encoding="utf-8")
    cx, duals = complex_from_doc(json.loads(text))
    assert dumps(complex_doc(cx, duals)) == text


@given(tropical_polynomials())
def test_random_complex_round_trip(f):
    text = dumps(hypersurface_doc(hypersurface(f)))
    cx, duals = complex_from_doc(json.loads(text))
    assert dumps(complex_doc(cx, duals)) == text


def test_outputs_are_deterministic(capsys):
    argv = ["stable", "--input", str(DATA / "multeg_p3.json"), "--component", "0", "--seed", "17"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "tropint.cli", "np1d", "--input", str(DATA / "roots_1d.json")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and '"segments"' in res.stdout


def test_worker_cap_does_not_change_output(capsys, monkeypatch):
    argv = ["intersect", "--input", str(DATA / "multeg_p3.json")]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("TROPINT_WORKERS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel
