import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from volpoly import fixtures  # noqa: E402
from volpoly.poly import HomogeneousPoly, simplex_points  # noqa: E402
from volpoly.polytope import BodyCollection, RationalPolytope  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def cubic():
    """Lorentzian cubic with M-convex support that is not a volume polynomial."""
    return HomogeneousPoly.from_json(fixtures.load("lorentzian_non_volume_cubic"))


@st.composite
def polys(draw, max_vars=3, max_degree=3, lo=0, hi=6, min_degree=0):
    n = draw(st.integers(1, max_vars))
    d = draw(st.integers(min_degree, max_degree))
    pts = list(simplex_points(n, d))
    coeffs = draw(st.lists(st.integers(lo, hi), min_size=len(pts), max_size=len(pts)))
    return HomogeneousPoly(n, d, dict(zip(pts, coeffs)))


@st.composite
def same_shape_polys(draw, count=2, max_vars=3, max_degree=3):
    n = draw(st.integers(1, max_vars))
    out = []
    for _ in range(count):
        d = draw(st.integers(0, max_degree))
        pts = list(simplex_points(n, d))
        coeffs = draw(st.lists(st.integers(-4, 4), min_size=len(pts), max_size=len(pts)))
        out.append(HomogeneousPoly(n, d, dict(zip(pts, coeffs))))
    return out


def _rational(draw, hi=3):
    return Fraction(draw(st.integers(0, hi * 2)), draw(st.sampled_from([1, 2])))


@st.composite
def polytopes(draw, dim=None, max_vertices=6, hi=3, rational=False):
    d = dim if dim is not None else draw(st.integers(1, 4))
    k = draw(st.integers(1, max_vertices))
    if rational:
        verts = [[_rational(draw, hi) for _ in range(d)] for _ in range(k)]
    else:
        verts = [[draw(st.integers(0, hi)) for _ in range(d)] for _ in range(k)]
    return RationalPolytope(d, verts)


@st.composite
def collections(draw, dim=None, max_bodies=3, max_vertices=5):
    d = dim if dim is not None else draw(st.integers(1, 3))
    n = draw(st.integers(1, max_bodies))
    return BodyCollection([draw(polytopes(dim=d, max_vertices=max_vertices)) for _ in range(n)])
