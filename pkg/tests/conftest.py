import os
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tropint.convex import Polyhedron
from tropint.tropical import TropicalPolynomial

settings.register_profile(
    "default", deadline=None, derandomize=True, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def data_dir():
    return DATA


# ---------------------------------------------------------------- strategies

small_ints = st.integers(min_value=-4, max_value=4)
rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))


def lattice_points(n, box=3):
    return st.tuples(*[st.integers(-box, box)] * n)


@st.composite
def lattice_polytopes(draw, n=2, max_points=5, box=3):
    pts = draw(st.lists(lattice_points(n, box), min_size=1, max_size=max_points))
    return Polyhedron.from_points(pts, ambient_dim=n)


@st.composite
def tropical_polynomials(draw, n=2, min_terms=2, max_terms=6, max_exponent=3):
    exps = draw(st.lists(st.tuples(*[st.integers(0, max_exponent)] * n),
                         min_size=min_terms, max_size=max_terms, unique=True))
    ws = draw(st.lists(rationals, min_size=len(exps), max_size=len(exps)))
    return TropicalPolynomial(dict(zip(exps, ws)), n=n)


@st.composite
def boxes(draw, n=2, box=3):
    lo = draw(st.tuples(*[st.integers(-box, box)] * n))
    size = draw(st.tuples(*[st.integers(0, box)] * n))
    return Polyhedron.box(lo, [a + b for a, b in zip(lo, size)])
