"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed or out-of-range graph input."""


class ParseError(GraphInputError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class BoundsError(GraphInputError):
    pass


class CapacityError(GraphInputError):
    pass


class InvariantViolation(RuntimeError):
    """An internal guarantee of the construction did not hold."""


class ClaimViolation(InvariantViolation):
    """A dominating set exceeded its size bound."""


class SubgraphViolation(ValueError):
    """A candidate spanner contains an edge that is not in the host graph."""


class VerificationCapExceeded(ValueError):
    pass
