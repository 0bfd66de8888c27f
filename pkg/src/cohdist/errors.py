"""Exception types raised across the package."""


class CohDistError(Exception):
    pass


class NotHermitian(CohDistError, ValueError):
    pass


class DimensionMismatch(CohDistError, ValueError):
    pass


class ValidationError(CohDistError, ValueError):
    """A matrix failed a state invariant. The message names the invariant and the residual."""


class InvalidCoefficients(ValidationError):
    pass


class InvalidParameter(CohDistError, ValueError):
    pass


class RankMismatch(CohDistError, ValueError):
    pass


class PartitionViolation(CohDistError, ArithmeticError):
    """The coherence ledger failed to sum up; indicates a numerical fault, not physics."""


class ParseError(CohDistError, ValueError):
    pass


class UnknownGenerator(CohDistError, KeyError):
    pass


class InvalidRange(CohDistError, ValueError):
    pass
