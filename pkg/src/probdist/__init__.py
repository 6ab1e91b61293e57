"""Univariate probability distributions, inversion sampling and Pearson's chi-squared test."""

from .chisq import (
    ChiSquaredTestResult,
    ContingencyTable,
    SparseTableWarning,
    expected_counts,
    independence_test,
    marginals,
    pearson_statistic,
)
from .core import (
    ContinuousDistribution,
    ContinuousSupport,
    DiscreteDistribution,
    DiscreteSupport,
    ProbabilityDistribution,
    bisect_quantile,
    density,
    integrate_cdf,
    loop_quantile,
    make_continuous,
    make_discrete,
    probability,
    quantile,
    random_variate,
    sum_cdf,
)
from .errors import (
    ConvergenceError,
    DomainError,
    ParameterError,
    ProbdistError,
    SupportError,
    TableError,
    UnknownDistributionError,
)
from .families import (
    FAMILIES,
    beta_distribution,
    binomial_distribution,
    chi_squared_distribution,
    exponential_distribution,
    f_distribution,
    gamma_distribution,
    geometric_distribution,
    hypergeometric_distribution,
    make_builtin,
    negative_binomial_distribution,
    normal_distribution,
    poisson_distribution,
    t_distribution,
    uniform_distribution,
)
from .rng import RandomState, next_uniform, seed_state

__version__ = "0.1.0"
