from __future__ import annotations

import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from domp.exactnum import ExactMatrix, GaussianRational, MatPoly, Poly  # noqa: E402
from domp.weyl import MatDiffOp  # noqa: E402

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussian = st.builds(GaussianRational, small_fracs, small_fracs)
real_gaussian = st.builds(GaussianRational, small_fracs)
nonzero_gaussian = gaussian.filter(lambda z: not z.is_zero())


def polys(max_degree: int = 3, elements=gaussian):
    return st.lists(elements, min_size=0, max_size=max_degree + 1).map(Poly)


def matrices(n: int = 2, elements=gaussian):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(ExactMatrix)


def matpolys(n: int = 2, max_degree: int = 2, elements=gaussian):
    return st.lists(matrices(n, elements), min_size=1, max_size=max_degree + 1).map(lambda cs: MatPoly(cs, (n, n)))


def operators(n: int = 2, max_order: int = 2, max_degree: int = 2, elements=gaussian):
    return st.lists(matpolys(n, max_degree, elements), min_size=0, max_size=max_order + 1).map(
        lambda cs: MatDiffOp(cs, n)
    )


def filtration_operators(n: int = 2, max_order: int = 2, elements=gaussian):
    """Operators with deg a_i <= i (degree-filtration preserving)."""

    def build(data):
        return MatDiffOp([MatPoly(cs[: i + 1], (n, n)) for i, cs in enumerate(data)], n)

    return st.lists(
        st.lists(matrices(n, elements), min_size=max_order + 1, max_size=max_order + 1),
        min_size=1,
        max_size=max_order + 1,
    ).map(build)
