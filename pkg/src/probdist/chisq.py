"""Pearson's chi-squared test for independence in a two-way table."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import TableError
from .families import chi_squared_distribution

__all__ = [
    "ContingencyTable",
    "ChiSquaredTestResult",
    "SparseTableWarning",
    "marginals",
    "expected_counts",
    "pearson_statistic",
    "independence_test",
]

MIN_EXPECTED_COUNT = 5


class SparseTableWarning(UserWarning):
    """Some expected counts fall below the usual validity threshold of 5."""


@dataclass(frozen=True)
class ContingencyTable:
    """An ``m x n`` table of nonnegative integer counts, ``m, n >= 2``.

    Every row and column must have a positive total. Construction fails
    with :class:`TableError` otherwise, naming the offending row or column.
    """

    counts: tuple

    def __init__(self, counts: Sequence[Sequence[int]]):
        rows = []
        for i, row in enumerate(counts):
            cells = []
            for j, value in enumerate(row):
                if isinstance(value, bool) or not float(value).is_integer() or value < 0:
                    raise TableError(f"cell ({i}, {j}) must be a nonnegative integer, got {value!r}")
                cells.append(int(value))
            rows.append(tuple(cells))
        if len(rows) < 2:
            raise TableError(f"table needs at least 2 rows, got {len(rows)}")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise TableError(f"row {i} has {len(row)} columns, expected {width}")
        if width < 2:
            raise TableError(f"table needs at least 2 columns, got {width}")
        for i, row in enumerate(rows):
            if sum(row) == 0:
                raise TableError(f"row {i} sums to zero")
        for j in range(width):
            if sum(row[j] for row in rows) == 0:
                raise TableError(f"column {j} sums to zero")
        object.__setattr__(self, "counts", tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.counts), len(self.counts[0])

    def transpose(self) -> "ContingencyTable":
        return ContingencyTable(list(zip(*self.counts)))


@dataclass(frozen=True)
class ChiSquaredTestResult:
    statistic: float
    degrees_of_freedom: int
    p_value: float
    expected: tuple


def _as_table(table) -> ContingencyTable:
    return table if isinstance(table, ContingencyTable) else ContingencyTable(table)


def marginals(table) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Row sums, column sums and grand total."""
    counts = _as_table(table).counts
    row_sums = tuple(sum(row) for row in counts)
    col_sums = tuple(sum(col) for col in zip(*counts))
    return row_sums, col_sums, sum(row_sums)


def _expected_exact(table: ContingencyTable) -> list[list[Fraction]]:
    row_sums, col_sums, total = marginals(table)
    return [[Fraction(r * c, total) for c in col_sums] for r in row_sums]


def expected_counts(table) -> tuple[tuple[float, ...], ...]:
    """``E[i][j] = row_sum[i] * col_sum[j] / N`` under independence."""
    table = _as_table(table)
    return tuple(tuple(float(e) for e in row) for row in _expected_exact(table))


def pearson_statistic(table) -> tuple[float, int]:
    """Pearson's ``sum (O - E)**2 / E`` and its degrees of freedom ``(m-1)(n-1)``.

    Each cell's term is formed exactly as the rational
    ``(O*N - R*C)**2 / (N*R*C)`` and rounded once; the terms are then
    summed row-major with :func:`math.fsum`.
    """
    table = _as_table(table)
    row_sums, col_sums, total = marginals(table)
    terms = []
    for observed_row, r in zip(table.counts, row_sums):
        for observed, c in zip(observed_row, col_sums):
            rc = r * c
            terms.append((observed * total - rc) ** 2 / (total * rc))
    m, n = table.shape
    return math.fsum(terms), (m - 1) * (n - 1)


def independence_test(table) -> ChiSquaredTestResult:
    """Asymptotic test of independence between the row and column variables.

    The p-value is the upper tail of the chi-squared distribution with
    ``(m-1)(n-1)`` degrees of freedom at the statistic. A
    :class:`SparseTableWarning` lists any cells whose expected count is
    below 5, where the approximation is doubtful; the test still runs.

    >>> result = independence_test([[10, 0], [0, 10]])
    >>> result.statistic, result.degrees_of_freedom
    (20.0, 1)
    """
    table = _as_table(table)
    statistic, df = pearson_statistic(table)
    exact = _expected_exact(table)
    sparse = [(i, j) for i, row in enumerate(exact) for j, e in enumerate(row) if e < MIN_EXPECTED_COUNT]
    if sparse:
        cells = ", ".join(f"({i}, {j})" for i, j in sparse)
        warnings.warn(
            f"{len(sparse)} of {len(exact) * len(exact[0])} expected counts are below "
            f"{MIN_EXPECTED_COUNT}: {cells}",
            SparseTableWarning,
            stacklevel=2,
        )
    p_value = chi_squared_distribution(df).probability(statistic, lower_tail=False)
    expected = tuple(tuple(float(e) for e in row) for row in exact)
    return ChiSquaredTestResult(statistic, df, p_value, expected)
