"""Exception types shared across the engine."""


class BudgetExceeded(RuntimeError):
    """A computation would exceed a configured size budget."""


class InvariantViolation(RuntimeError):
    """An identity that must hold exactly failed; this indicates a bug, not bad input."""


class OracleError(RuntimeError):
    """The evaluation oracle could not determine a unique decomposition."""
