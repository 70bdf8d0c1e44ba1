class ParameterError(ValueError):
    """Invalid input data or arguments."""


class InfeasibleInputError(ValueError):
    """A routine received a problem that violates its feasibility precondition."""


class SizeGuardError(ValueError):
    """Exhaustive search refused because the instance is too large."""
