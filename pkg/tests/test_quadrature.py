import math

import pytest

from probdist.errors import ConvergenceError
from probdist.quadrature import integrate


def std_normal(x):
    return math.exp(-0.5 * x * x) / math.sqrt(2 * math.pi)


@pytest.mark.parametrize("f, a, b, expected", [
    (lambda x: 1.0, 0.0, 0.75, 0.75),
    (lambda x: x * x, -1.0, 2.0, 3.0),
    (math.exp, 0.0, 1.0, math.e - 1),
    (std_normal, -math.inf, 0.0, 0.5),
    (std_normal, -math.inf, math.inf, 1.0),
    (lambda x: math.exp(-x), 0.0, math.inf, 1.0),
    (lambda x: 1 / (math.pi * (1 + x * x)), -math.inf, -3.0, 0.5 - math.atan(3) / math.pi),
])
def test_known_integrals(f, a, b, expected):
    assert integrate(f, a, b) == pytest.approx(expected, abs=1e-10)


def test_reversed_and_empty_ranges():
    assert integrate(math.exp, 1.0, 0.0) == pytest.approx(1 - math.e, abs=1e-12)
    assert integrate(math.exp, 2.0, 2.0) == 0.0


def test_finds_mass_at_small_and_large_scales():
    assert integrate(lambda x: 1e6 * math.exp(-1e6 * x), 0.0, 1e6) == pytest.approx(1.0, abs=1e-9)
    assert integrate(lambda x: math.exp(-x / 1e5) / 1e5, 0.0, math.inf) == pytest.approx(1.0, abs=1e-9)


def test_integrable_endpoint_singularity():
    # chi-squared(1) density on [0, 1]
    f = lambda x: x ** -0.5 * math.exp(-x / 2) / math.sqrt(2 * math.pi)  # noqa: E731
    assert integrate(f, 0.0, 1.0) == pytest.approx(math.erf(math.sqrt(0.5)), abs=1e-8)


def test_subdivision_budget_names_interval():
    with pytest.raises(ConvergenceError, match=r"\[0.0, 1.0\]"):
        integrate(lambda x: math.sin(1 / x) / x, 0.0, 1.0, abs_tol=1e-14, max_subdivisions=200)
