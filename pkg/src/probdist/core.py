"""Generic discrete and continuous distributions built from a density.

A distribution bundles four callables (density, CDF, quantile, sampler)
with a support. Only the density is mandatory; the rest are synthesized:

* discrete CDF by summing the mass function from the support's lower bound,
* continuous CDF by adaptive quadrature of the density,
* discrete quantile by accumulating mass until the target is reached,
* continuous quantile by bisection on ``F(x) - p``,
* sampling by inversion, i.e. the quantile of a uniform variate.

Example
-------
>>> die = make_discrete(lambda x: 1 / 6.0, support=(1, 6))
>>> die.density(3)
0.16666666666666666
>>> die.probability(3)
0.5
>>> die.quantile(0.5)
3
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import ConvergenceError, DomainError, SupportError
from .quadrature import integrate
from .rng import RandomState

__all__ = [
    "DiscreteSupport",
    "ContinuousSupport",
    "ProbabilityDistribution",
    "DiscreteDistribution",
    "ContinuousDistribution",
    "make_discrete",
    "make_continuous",
    "density",
    "probability",
    "quantile",
    "random_variate",
    "sum_cdf",
    "integrate_cdf",
    "loop_quantile",
    "bisect_quantile",
]

DISCRETE_QUANTILE_MAX_ITER = 10_000_000
BISECTION_MAX_ITER = 200
BRACKET_MAX_DOUBLINGS = 60
QUADRATURE_ABS_TOL = 1e-9
MASS_CHECK_TOL = 1e-4


@dataclass(frozen=True)
class DiscreteSupport:
    """Integer range ``{lower, ..., upper}``; ``upper`` may be ``math.inf``."""

    lower: int = 0
    upper: Union[int, float] = math.inf

    def __post_init__(self):
        if not _is_integral(self.lower):
            raise SupportError(f"discrete support lower bound must be an integer, got {self.lower!r}")
        if not (self.upper == math.inf or _is_integral(self.upper)):
            raise SupportError(f"discrete support upper bound must be an integer or inf, got {self.upper!r}")
        if self.upper != math.inf and self.lower > self.upper:
            raise SupportError(f"discrete support has lower {self.lower} > upper {self.upper}")
        object.__setattr__(self, "lower", int(self.lower))
        if self.upper != math.inf:
            object.__setattr__(self, "upper", int(self.upper))

    @property
    def bounded(self) -> bool:
        return self.upper != math.inf

    def __contains__(self, x) -> bool:
        return _is_integral(x) and self.lower <= x <= self.upper

    def __str__(self) -> str:
        upper = "∞" if not self.bounded else str(self.upper)
        return f"{{{self.lower}, ..., {upper}}}"


@dataclass(frozen=True)
class ContinuousSupport:
    """Closed real interval; either endpoint may be infinite."""

    lower: float = 0.0
    upper: float = math.inf

    def __post_init__(self):
        if math.isnan(self.lower) or math.isnan(self.upper) or not self.lower < self.upper:
            raise SupportError(f"continuous support needs lower < upper, got ({self.lower!r}, {self.upper!r})")

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper

    def __str__(self) -> str:
        return f"[{self.lower:g}, {self.upper:g}]"


def _is_integral(x) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    try:
        return math.isfinite(x) and float(x).is_integer()
    except (TypeError, ValueError):
        return False


def _clamp01(value: float) -> float:
    return min(1.0, max(0.0, value))


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")


class ProbabilityDistribution:
    """Shared surface of :class:`DiscreteDistribution` and :class:`ContinuousDistribution`."""

    description: str

    def density(self, x):
        raise NotImplementedError

    def probability(self, x, lower_tail: bool = True) -> float:
        raise NotImplementedError

    def quantile(self, p: float, lower_tail: bool = True):
        raise NotImplementedError

    def random(self, state: RandomState):
        return self.sampler(state)

    def __str__(self) -> str:
        return self.description


@dataclass(frozen=True, eq=False)
class DiscreteDistribution(ProbabilityDistribution):
    pmf: Callable[[int], float]
    cdf: Callable[[int], float]
    quantile_fn: Callable[[float], int]
    sampler: Callable[[RandomState], int]
    support: DiscreteSupport
    description: str

    def density(self, x) -> float:
        if x not in self.support:
            return 0.0
        return float(self.pmf(int(x)))

    def probability(self, x, lower_tail: bool = True) -> float:
        """``P(X <= x)``, or ``P(X > x)`` when ``lower_tail`` is false."""
        if x < self.support.lower:
            lower = 0.0
        elif self.support.bounded and x >= self.support.upper:
            lower = _clamp01(self.cdf(self.support.upper))
        elif math.isinf(x):
            lower = 1.0
        else:
            lower = _clamp01(self.cdf(math.floor(x)))
        return lower if lower_tail else 1.0 - lower

    def quantile(self, p: float, lower_tail: bool = True) -> int:
        _check_probability(p)
        if not lower_tail:
            p = 1.0 - p
        return int(self.quantile_fn(p))

    def __repr__(self) -> str:
        return f"DiscreteDistribution({self.description!r}, support={self.support})"


@dataclass(frozen=True, eq=False)
class ContinuousDistribution(ProbabilityDistribution):
    pdf: Callable[[float], float]
    cdf: Callable[[float], float]
    quantile_fn: Callable[[float], float]
    sampler: Callable[[RandomState], float]
    support: ContinuousSupport
    description: str

    def density(self, x) -> float:
        if x not in self.support:
            return 0.0
        return float(self.pdf(x))

    def probability(self, x, lower_tail: bool = True) -> float:
        if x <= self.support.lower:
            lower = 0.0
        elif x >= self.support.upper:
            lower = 1.0
        else:
            lower = _clamp01(self.cdf(x))
        return lower if lower_tail else 1.0 - lower

    def quantile(self, p: float, lower_tail: bool = True) -> float:
        """Smallest ``x`` with ``F(x) >= p``; the support endpoints at 0 and 1."""
        _check_probability(p)
        if not lower_tail:
            p = 1.0 - p
        if p == 0.0:
            return self.support.lower
        if p == 1.0:
            return self.support.upper
        return float(self.quantile_fn(p))

    def __repr__(self) -> str:
        return f"ContinuousDistribution({self.description!r}, support={self.support})"


# --------------------------------------------------------------------------
# default algorithms
# --------------------------------------------------------------------------

def sum_cdf(pmf: Callable[[int], float], support: DiscreteSupport, x) -> float:
    """``sum(pmf(k) for k = lower .. floor(x))`` accumulated left to right.

    The accumulation order matches :func:`loop_quantile` exactly, so the two
    agree to the last bit and discrete round trips are exact.
    """
    if x < support.lower:
        return 0.0
    top = math.floor(x)
    if support.bounded:
        top = min(top, support.upper)
    total = 0.0
    for k in range(support.lower, top + 1):
        total += pmf(k)
    return _clamp01(total)


def _last_mass_point(pmf, support: DiscreteSupport) -> int:
    for k in range(support.upper, support.lower - 1, -1):
        if pmf(k) > 0:
            return k
    return support.upper


def loop_quantile(
    pmf: Callable[[int], float],
    support: DiscreteSupport,
    p: float,
    cdf: Optional[Callable[[int], float]] = None,
    max_iter: int = DISCRETE_QUANTILE_MAX_ITER,
) -> int:
    """Smallest support point whose cumulative mass reaches ``p``.

    Without ``cdf`` this adds ``pmf(lower), pmf(lower + 1), ...`` until the
    running total reaches ``p``. When a (closed-form) ``cdf`` is supplied it
    is used instead as an accelerator: the answer is located by galloping
    and then binary search over the integers, which gives the same result
    for any nondecreasing ``cdf``.

    ``p == 0`` returns the support's lower bound. ``p == 1`` returns the last
    point with positive mass on a bounded support and is an error on an
    unbounded one.
    """
    _check_probability(p)
    if p == 0.0:
        return support.lower
    if p == 1.0:
        if not support.bounded:
            raise DomainError("quantile at p = 1 is infinite on a support unbounded above")
        return _last_mass_point(pmf, support)
    if cdf is not None:
        return _search_quantile(pmf, cdf, support, p, max_iter)

    total = 0.0
    k = support.lower
    for _ in range(max_iter):
        total += pmf(k)
        if total >= p:
            return k
        if support.bounded and k >= support.upper:
            # rounding left the total a hair under p
            return _last_mass_point(pmf, support)
        k += 1
    raise ConvergenceError(
        f"cumulative mass stayed below {p!r} after {max_iter} terms; "
        "the mass function may sum to less than 1"
    )


def _search_quantile(pmf, cdf, support: DiscreteSupport, p: float, max_iter: int) -> int:
    # invariant once found: cdf(lo) < p <= cdf(hi), with lo = lower - 1 meaning "none"
    lo = support.lower - 1
    hi = support.lower
    step = 1
    while cdf(hi) < p:
        if support.bounded and hi >= support.upper:
            return _last_mass_point(pmf, support)
        lo = hi
        hi = support.lower + step
        if support.bounded:
            hi = min(hi, support.upper)
        step *= 2
        if step > max_iter:
            raise ConvergenceError(
                f"cumulative probability stayed below {p!r} up to {hi}; "
                "the mass function may sum to less than 1"
            )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if cdf(mid) >= p:
            hi = mid
        else:
            lo = mid
    return hi


def integrate_cdf(pdf: Callable[[float], float], support: ContinuousSupport, x: float) -> float:
    """Quadrature of ``pdf`` over ``[lower, x]`` intersected with the support."""
    if x <= support.lower:
        return 0.0
    top = min(x, support.upper)
    return _clamp01(integrate(pdf, support.lower, top, abs_tol=QUADRATURE_ABS_TOL))


def _bracket(cdf, support: ContinuousSupport, p: float) -> tuple[float, float]:
    lower, upper = support.lower, support.upper
    lo_inf, hi_inf = math.isinf(lower), math.isinf(upper)
    if not lo_inf and not hi_inf:
        return lower, upper

    # start from [-1, 1] clipped to the support, then double outward
    if lo_inf and hi_inf:
        lo, hi = -1.0, 1.0
    elif lo_inf:
        hi = upper
        lo = -1.0 if upper > -1.0 else upper - 1.0
    else:
        lo = lower
        hi = 1.0 if lower < 1.0 else lower + 1.0

    if hi_inf:
        width = hi - (0.0 if lo_inf else lo)
        anchor = 0.0 if lo_inf else lo
        for _ in range(BRACKET_MAX_DOUBLINGS):
            if cdf(hi) >= p:
                break
            width *= 2.0
            hi = anchor + width
        else:
            raise ConvergenceError(f"could not bracket the quantile at p={p!r}: F stays below p up to {hi!r}")
    if lo_inf:
        anchor = 0.0 if hi_inf else hi
        width = anchor - lo
        for _ in range(BRACKET_MAX_DOUBLINGS):
            if cdf(lo) < p:
                break
            width *= 2.0
            lo = anchor - width
        else:
            raise ConvergenceError(f"could not bracket the quantile at p={p!r}: F stays above p down to {lo!r}")
    return lo, hi


def bisect_quantile(cdf: Callable[[float], float], support: ContinuousSupport, p: float) -> float:
    """Root of ``F(x) - p`` by bisection.

    Stops once ``|F(x) - p| < 1e-12`` or the bracket is narrower than
    ``1e-10 * max(1, |x|)``, with a hard cap of 200 halvings.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"bisection quantile needs 0 < p < 1, got {p!r}")
    lo, hi = _bracket(cdf, support, p)
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        fmid = cdf(mid)
        if abs(fmid - p) < 1e-12:
            return mid
        if fmid < p:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-10 * max(1.0, abs(mid)):
            break
    return hi


def _inversion(quantile_fn, state: RandomState):
    u = state.next_uniform()
    while u == 0.0:
        # Q(0) is the bottom of the support, which may carry no mass or be -inf
        u = state.next_uniform()
    return quantile_fn(u)


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------

def make_discrete(
    pmf: Callable[[int], float],
    support=None,
    cdf: Optional[Callable[[int], float]] = None,
    quantile_fn: Optional[Callable[[float], int]] = None,
    sampler: Optional[Callable[[RandomState], int]] = None,
    description: Optional[str] = None,
) -> DiscreteDistribution:
    """Build a discrete distribution from its mass function.

    ``support`` is a :class:`DiscreteSupport` or a ``(lower, upper)`` pair and
    defaults to ``{0, 1, ...}``. Any of ``cdf``, ``quantile_fn`` and
    ``sampler`` left out is synthesized from ``pmf``.
    """
    if support is None:
        support = DiscreteSupport()
    elif not isinstance(support, DiscreteSupport):
        support = DiscreteSupport(*support)
    if cdf is None:
        cdf = functools.partial(sum_cdf, pmf, support)
    if quantile_fn is None:
        quantile_fn = functools.partial(loop_quantile, pmf, support)
    if sampler is None:
        sampler = functools.partial(_inversion, quantile_fn)
    if description is None:
        description = f"discrete distribution on {support}"
    return DiscreteDistribution(pmf, cdf, quantile_fn, sampler, support, description)


def make_continuous(
    pdf: Callable[[float], float],
    support=None,
    cdf: Optional[Callable[[float], float]] = None,
    quantile_fn: Optional[Callable[[float], float]] = None,
    sampler: Optional[Callable[[RandomState], float]] = None,
    description: Optional[str] = None,
    check_mass: bool = False,
) -> ContinuousDistribution:
    """Build a continuous distribution from its density.

    ``support`` defaults to ``[0, inf)``. With ``check_mass`` set, the
    density is integrated over the whole support and a warning is issued if
    the total differs from 1 by more than ``1e-4``.
    """
    if support is None:
        support = ContinuousSupport()
    elif not isinstance(support, ContinuousSupport):
        support = ContinuousSupport(*support)
    if check_mass:
        mass = integrate(pdf, support.lower, support.upper, abs_tol=QUADRATURE_ABS_TOL)
        if abs(mass - 1.0) > MASS_CHECK_TOL:
            warnings.warn(f"density integrates to {mass:.6g} over {support}, not 1", stacklevel=2)
    if cdf is None:
        cdf = functools.partial(integrate_cdf, pdf, support)
    if quantile_fn is None:
        quantile_fn = functools.partial(bisect_quantile, cdf, support)
    if sampler is None:
        sampler = functools.partial(_inversion, quantile_fn)
    if description is None:
        description = f"continuous distribution on {support}"
    return ContinuousDistribution(pdf, cdf, quantile_fn, sampler, support, description)


# --------------------------------------------------------------------------
# functional interface
# --------------------------------------------------------------------------

def density(dist: ProbabilityDistribution, x):
    return dist.density(x)


def probability(dist: ProbabilityDistribution, x, lower_tail: bool = True) -> float:
    return dist.probability(x, lower_tail=lower_tail)


def quantile(dist: ProbabilityDistribution, p: float, lower_tail: bool = True):
    return dist.quantile(p, lower_tail=lower_tail)


def random_variate(dist: ProbabilityDistribution, state: RandomState):
    return dist.random(state)
