import math
from pathlib import Path

import pytest

from probdist import (
    beta_distribution,
    binomial_distribution,
    chi_squared_distribution,
    exponential_distribution,
    f_distribution,
    gamma_distribution,
    geometric_distribution,
    hypergeometric_distribution,
    negative_binomial_distribution,
    normal_distribution,
    poisson_distribution,
    t_distribution,
    uniform_distribution,
)

DATA = Path(__file__).parent / "data"

# Births (rows, Jan..Dec) by deaths (columns, Jan..Dec) for 82 descendants of Queen Victoria.
BIRTH_DEATH = [
    [1, 0, 0, 0, 1, 2, 0, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 2],
    [1, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 1],
    [3, 0, 2, 0, 0, 0, 1, 0, 1, 3, 1, 1],
    [2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
    [2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 2, 1, 0, 0, 0, 0, 1, 1, 1, 2],
    [0, 0, 0, 3, 0, 0, 1, 0, 0, 1, 0, 2],
    [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 2, 0, 0, 1, 0, 0, 1, 1, 0],
    [0, 1, 1, 1, 2, 0, 0, 2, 0, 1, 1, 0],
    [0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
]

CONTINUOUS = {
    "uniform": lambda: uniform_distribution(-1.0, 3.0),
    "exponential": lambda: exponential_distribution(1.5),
    "normal": lambda: normal_distribution(1.0, 2.0),
    "gamma": lambda: gamma_distribution(3.0, 2.0),
    "chi-squared": lambda: chi_squared_distribution(5),
    "t": lambda: t_distribution(5),
    "f": lambda: f_distribution(5, 10),
    "beta": lambda: beta_distribution(2.0, 3.0),
}

DISCRETE = {
    "binomial": lambda: binomial_distribution(20, 0.3),
    "poisson": lambda: poisson_distribution(4.0),
    "geometric": lambda: geometric_distribution(0.3),
    "negative-binomial": lambda: negative_binomial_distribution(3.5, 0.4),
    "hypergeometric": lambda: hypergeometric_distribution(10, 8, 7),
}


@pytest.fixture
def birth_death():
    return [row[:] for row in BIRTH_DEATH]


@pytest.fixture
def birth_death_csv():
    return DATA / "birth-death.csv"


def ks_distance(samples, cdf):
    xs = sorted(samples)
    n = len(xs)
    d = 0.0
    for i, x in enumerate(xs):
        f = cdf(x)
        d = max(d, f - i / n, (i + 1) / n - f)
    return d


def grid(lo, hi, n):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


_criteria = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the terminal summary prints them all."""

    def record(label, ok, detail=""):
        _criteria.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
