"""Exception hierarchy shared across the package."""


class ProbdistError(Exception):
    """Base class for all errors raised by probdist."""


class DomainError(ProbdistError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(ProbdistError, ValueError):
    """A distribution parameter violates its family's constraints."""


class SupportError(ProbdistError, ValueError):
    """A support specification is malformed (e.g. lower bound above upper)."""


class ConvergenceError(ProbdistError, RuntimeError):
    """A numerical procedure exhausted its iteration or subdivision budget."""


class TableError(ProbdistError, ValueError):
    """A contingency table is malformed or has a zero marginal."""


class UnknownDistributionError(ProbdistError, LookupError):
    """No built-in family has the requested name."""
