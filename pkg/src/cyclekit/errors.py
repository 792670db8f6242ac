"""Exception types shared across the package."""


class HypothesisViolated(ValueError):
    """An operation's stated precondition does not hold for the input."""


class ConstructionIncomplete(RuntimeError):
    """The constructive engine ran out of implemented cases or budget.

    On inputs that satisfy the documented preconditions the advertised
    family always exists, so this exception is a bug signal (or a sign
    that the node budget is too small), never an expected outcome.
    """


class NoCore(LookupError):
    """No complete-bipartite core through the first root exists."""


class CapExceeded(RuntimeError):
    """An exactness cap (vertex count or search-node budget) was hit."""
