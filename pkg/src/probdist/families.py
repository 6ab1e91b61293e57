"""Named discrete and continuous families with closed-form CDFs.

Densities are evaluated in log space and exponentiated last. CDFs reduce to
the regularized incomplete gamma/beta functions where a reduction exists;
quantiles use a closed form when one is simple and otherwise fall back to
the generic search routines in :mod:`probdist.core`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

from . import specialfn
from .core import (
    ContinuousDistribution,
    ContinuousSupport,
    DiscreteDistribution,
    DiscreteSupport,
    bisect_quantile,
    loop_quantile,
    make_continuous,
    make_discrete,
)
from .errors import ParameterError, UnknownDistributionError
from .specialfn import _ibeta, log_beta, log_binomial_coefficient

__all__ = [
    "binomial_distribution",
    "poisson_distribution",
    "geometric_distribution",
    "negative_binomial_distribution",
    "hypergeometric_distribution",
    "uniform_distribution",
    "exponential_distribution",
    "normal_distribution",
    "gamma_distribution",
    "chi_squared_distribution",
    "t_distribution",
    "f_distribution",
    "beta_distribution",
    "Family",
    "FAMILIES",
    "make_builtin",
]

_SQRT2 = math.sqrt(2.0)
_LOG_2PI = math.log(2.0 * math.pi)


def _label(value) -> str:
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return repr(value) if isinstance(value, float) else str(value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def _as_count(name: str, value) -> int:
    _require(
        not isinstance(value, bool) and math.isfinite(value) and float(value).is_integer() and value >= 0,
        f"{name} must be a nonnegative integer, got {value!r}",
    )
    return int(value)


def _xlogy(a: float, y: float) -> float:
    """``a * log(y)`` with ``0 * log(0) = 0`` and the signed limit otherwise."""
    if y == 0.0:
        if a == 0.0:
            return 0.0
        return -math.inf if a > 0 else math.inf
    return a * math.log(y)


def _xlog1py(a: float, y: float) -> float:
    if y == -1.0:
        return _xlogy(a, 0.0)
    return a * math.log1p(y)


def _exp(value: float) -> float:
    return math.exp(value) if value < 709.0 else math.inf


# --------------------------------------------------------------------------
# discrete families
# --------------------------------------------------------------------------

def _discrete(pmf, support, cdf, description) -> DiscreteDistribution:
    quantile_fn = functools.partial(loop_quantile, pmf, support, cdf=cdf)
    return make_discrete(pmf, support=support, cdf=cdf, quantile_fn=quantile_fn, description=description)


def binomial_distribution(n: int, p: float) -> DiscreteDistribution:
    n = _as_count("binomial n", n)
    _require(0.0 <= p <= 1.0, f"binomial p must satisfy 0 <= p <= 1, got {p!r}")

    def pmf(x: int) -> float:
        if p == 0.0:
            return 1.0 if x == 0 else 0.0
        if p == 1.0:
            return 1.0 if x == n else 0.0
        return _exp(log_binomial_coefficient(n, x) + x * math.log(p) + (n - x) * math.log1p(-p))

    def cdf(x: int) -> float:
        if x >= n or p == 0.0:
            return 1.0
        if p == 1.0:
            return 0.0
        return _ibeta(1.0 - p, p, n - x, x + 1)

    return _discrete(pmf, DiscreteSupport(0, n), cdf, f"Binomial({n}, {_label(p)})")


def poisson_distribution(lam: float) -> DiscreteDistribution:
    _require(lam > 0 and math.isfinite(lam), f"Poisson lambda must be > 0, got {lam!r}")
    log_lam = math.log(lam)

    def pmf(x: int) -> float:
        return math.exp(x * log_lam - lam - math.lgamma(x + 1))

    def cdf(x: int) -> float:
        return specialfn.regularized_gamma_q(x + 1, lam)

    return _discrete(pmf, DiscreteSupport(0), cdf, f"Poisson({_label(lam)})")


def geometric_distribution(p: float) -> DiscreteDistribution:
    """Failures before the first success: ``P(X = x) = p (1-p)**x``, ``x = 0, 1, ...``."""
    _require(0.0 < p <= 1.0, f"geometric p must satisfy 0 < p <= 1, got {p!r}")
    log_p = math.log(p)

    def pmf(x: int) -> float:
        return math.exp(log_p + _xlog1py(x, -p))

    def cdf(x: int) -> float:
        if p == 1.0:
            return 1.0
        return -math.expm1((x + 1) * math.log1p(-p))

    return _discrete(pmf, DiscreteSupport(0), cdf, f"Geometric({_label(p)})")


def negative_binomial_distribution(r: float, p: float) -> DiscreteDistribution:
    """Failures before the ``r``-th success; ``r`` may be any positive real."""
    _require(r > 0 and math.isfinite(r), f"negative binomial r must be > 0, got {r!r}")
    _require(0.0 < p <= 1.0, f"negative binomial p must satisfy 0 < p <= 1, got {p!r}")
    log_front = r * math.log(p) - math.lgamma(r)

    def pmf(x: int) -> float:
        return math.exp(log_front + math.lgamma(x + r) - math.lgamma(x + 1) + _xlog1py(x, -p))

    def cdf(x: int) -> float:
        if p == 1.0:
            return 1.0
        return _ibeta(p, 1.0 - p, r, x + 1)

    return _discrete(pmf, DiscreteSupport(0), cdf, f"NegativeBinomial({_label(r)}, {_label(p)})")


def hypergeometric_distribution(m: int, n: int, k: int) -> DiscreteDistribution:
    """Successes in ``k`` draws without replacement from ``m`` successes and ``n`` failures.

    The declared support is ``{0, ..., m}``; points that cannot occur
    (``x > k`` or ``k - x > n``) have mass exactly zero.
    """
    m = _as_count("hypergeometric m", m)
    n = _as_count("hypergeometric n", n)
    k = _as_count("hypergeometric k", k)
    _require(k <= m + n, f"hypergeometric k must satisfy k <= m + n, got k={k}, m + n={m + n}")
    log_total = log_binomial_coefficient(m + n, k)
    first = max(0, k - n)

    def pmf(x: int) -> float:
        return math.exp(log_binomial_coefficient(m, x) + log_binomial_coefficient(n, k - x) - log_total)

    def cdf(x: int) -> float:
        total = 0.0
        for j in range(first, min(x, m) + 1):
            total += pmf(j)
        return total

    return _discrete(pmf, DiscreteSupport(0, m), cdf, f"Hypergeometric({m}, {n}, {k})")


# --------------------------------------------------------------------------
# continuous families
# --------------------------------------------------------------------------

def _continuous(pdf, support, cdf, quantile_fn, description) -> ContinuousDistribution:
    if quantile_fn is None:
        quantile_fn = functools.partial(bisect_quantile, cdf, support)
    return make_continuous(pdf, support=support, cdf=cdf, quantile_fn=quantile_fn, description=description)


def uniform_distribution(a: float, b: float) -> ContinuousDistribution:
    _require(math.isfinite(a) and math.isfinite(b) and a < b, f"uniform needs finite a < b, got ({a!r}, {b!r})")
    width = b - a
    return _continuous(
        lambda x: 1.0 / width,
        ContinuousSupport(a, b),
        lambda x: (x - a) / width,
        lambda p: a + p * width,
        f"U({_label(a)}, {_label(b)})",
    )


def exponential_distribution(lam: float) -> ContinuousDistribution:
    _require(lam > 0 and math.isfinite(lam), f"exponential lambda must be > 0, got {lam!r}")
    return _continuous(
        lambda x: lam * math.exp(-lam * x),
        ContinuousSupport(0.0, math.inf),
        lambda x: -math.expm1(-lam * x),
        lambda p: -math.log1p(-p) / lam,
        f"Exp({_label(lam)})",
    )


def normal_distribution(mu: float = 0.0, sigma: float = 1.0) -> ContinuousDistribution:
    _require(math.isfinite(mu), f"normal mu must be finite, got {mu!r}")
    _require(sigma > 0 and math.isfinite(sigma), f"normal sigma must be > 0, got {sigma!r}")
    log_norm = -math.log(sigma) - 0.5 * _LOG_2PI

    def pdf(x: float) -> float:
        z = (x - mu) / sigma
        return math.exp(log_norm - 0.5 * z * z)

    def cdf(x: float) -> float:
        return 0.5 * specialfn.erfc(-(x - mu) / (sigma * _SQRT2))

    def quantile_fn(p: float) -> float:
        return mu + sigma * _SQRT2 * specialfn.inverse_erf(2.0 * p - 1.0)

    return _continuous(pdf, ContinuousSupport(-math.inf, math.inf), cdf, quantile_fn,
                       f"N({_label(mu)}, {_label(sigma)})")


def gamma_distribution(alpha: float, lam: float) -> ContinuousDistribution:
    """Shape ``alpha``, rate ``lam``."""
    _require(alpha > 0 and math.isfinite(alpha), f"gamma alpha must be > 0, got {alpha!r}")
    _require(lam > 0 and math.isfinite(lam), f"gamma lambda must be > 0, got {lam!r}")
    log_front = alpha * math.log(lam) - math.lgamma(alpha)

    def pdf(x: float) -> float:
        return _exp(log_front + _xlogy(alpha - 1.0, x) - lam * x)

    def cdf(x: float) -> float:
        return specialfn.regularized_gamma_p(alpha, lam * x)

    return _continuous(pdf, ContinuousSupport(0.0, math.inf), cdf, None, f"Γ({_label(alpha)}, {_label(lam)})")


def chi_squared_distribution(nu: float) -> ContinuousDistribution:
    _require(nu > 0 and math.isfinite(nu), f"chi-squared nu must be > 0, got {nu!r}")
    half = 0.5 * nu
    log_front = -half * math.log(2.0) - math.lgamma(half)

    def pdf(x: float) -> float:
        return _exp(log_front + _xlogy(half - 1.0, x) - 0.5 * x)

    def cdf(x: float) -> float:
        return specialfn.regularized_gamma_p(half, 0.5 * x)

    return _continuous(pdf, ContinuousSupport(0.0, math.inf), cdf, None, f"χ²({_label(nu)})")


def t_distribution(nu: float) -> ContinuousDistribution:
    _require(nu > 0 and math.isfinite(nu), f"Student's t nu must be > 0, got {nu!r}")
    log_front = math.lgamma(0.5 * (nu + 1.0)) - 0.5 * math.log(nu * math.pi) - math.lgamma(0.5 * nu)

    def pdf(x: float) -> float:
        return math.exp(log_front - 0.5 * (nu + 1.0) * math.log1p(x * x / nu))

    def cdf(x: float) -> float:
        t2 = x * x
        tail = 0.5 * _ibeta(nu / (nu + t2), t2 / (nu + t2), 0.5 * nu, 0.5)
        return 1.0 - tail if x >= 0 else tail

    return _continuous(pdf, ContinuousSupport(-math.inf, math.inf), cdf, None, f"t({_label(nu)})")


def f_distribution(nu1: float, nu2: float) -> ContinuousDistribution:
    _require(nu1 > 0 and math.isfinite(nu1), f"F nu1 must be > 0, got {nu1!r}")
    _require(nu2 > 0 and math.isfinite(nu2), f"F nu2 must be > 0, got {nu2!r}")
    log_b = log_beta(0.5 * nu1, 0.5 * nu2)
    log_nu2_term = nu2 * math.log(nu2)

    def pdf(x: float) -> float:
        if x == 0.0:
            # limit of (nu1/nu2)^(nu1/2) x^(nu1/2 - 1) / B
            return _exp(0.5 * nu1 * math.log(nu1 / nu2) - log_b + _xlogy(0.5 * nu1 - 1.0, x))
        s = nu1 * x + nu2
        log_root = 0.5 * (nu1 * math.log(nu1 * x) + log_nu2_term - (nu1 + nu2) * math.log(s))
        return _exp(log_root - math.log(x) - log_b)

    def cdf(x: float) -> float:
        s = nu1 * x + nu2
        return _ibeta(nu1 * x / s, nu2 / s, 0.5 * nu1, 0.5 * nu2)

    return _continuous(pdf, ContinuousSupport(0.0, math.inf), cdf, None, f"F({_label(nu1)}, {_label(nu2)})")


def beta_distribution(alpha: float, beta: float) -> ContinuousDistribution:
    _require(alpha > 0 and math.isfinite(alpha), f"beta alpha must be > 0, got {alpha!r}")
    _require(beta > 0 and math.isfinite(beta), f"beta beta must be > 0, got {beta!r}")
    log_b = log_beta(alpha, beta)

    def pdf(x: float) -> float:
        return _exp(_xlogy(alpha - 1.0, x) + _xlog1py(beta - 1.0, -x) - log_b)

    def cdf(x: float) -> float:
        return _ibeta(x, 1.0 - x, alpha, beta)

    return _continuous(pdf, ContinuousSupport(0.0, 1.0), cdf, None, f"Beta({_label(alpha)}, {_label(beta)})")


# --------------------------------------------------------------------------
# registry used by the CLI
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    constructor: Callable
    params: tuple
    discrete: bool

    def build(self, params: dict):
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            wanted = ", ".join(self.params)
            problems = []
            if missing:
                problems.append("missing " + ", ".join(missing))
            if extra:
                problems.append("unknown " + ", ".join(extra))
            raise ParameterError(f"{self.name} takes parameters ({wanted}); {'; '.join(problems)}")
        return self.constructor(*(params[p] for p in self.params))


FAMILIES = {
    f.name: f
    for f in (
        Family("binomial", binomial_distribution, ("n", "p"), True),
        Family("poisson", poisson_distribution, ("lambda",), True),
        Family("geometric", geometric_distribution, ("p",), True),
        Family("negative-binomial", negative_binomial_distribution, ("r", "p"), True),
        Family("hypergeometric", hypergeometric_distribution, ("m", "n", "k"), True),
        Family("uniform", uniform_distribution, ("a", "b"), False),
        Family("exponential", exponential_distribution, ("lambda",), False),
        Family("normal", normal_distribution, ("mu", "sigma"), False),
        Family("gamma", gamma_distribution, ("alpha", "lambda"), False),
        Family("chi-squared", chi_squared_distribution, ("nu",), False),
        Family("t", t_distribution, ("nu",), False),
        Family("f", f_distribution, ("nu1", "nu2"), False),
        Family("beta", beta_distribution, ("alpha", "beta"), False),
    )
}


def make_builtin(kind: str, params: dict):
    """Construct a named family from a ``{parameter name: value}`` mapping."""
    try:
        family = FAMILIES[kind]
    except KeyError:
        raise UnknownDistributionError(f"unknown distribution {kind!r}; choose from {', '.join(FAMILIES)}") from None
    return family.build(params)
