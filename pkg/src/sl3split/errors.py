"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class HypothesisError(ValueError):
    """A stated precondition of a formula or construction is violated."""


class ConsistencyError(RuntimeError):
    """Internal invariant broken: the input data must be corrupt."""


class MembershipError(ValueError):
    """A matrix fails a required subgroup membership test."""


class ParseError(ValueError):
    """Malformed textual input."""
