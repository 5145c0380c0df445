"""Exception hierarchy shared by all modules.

Every class carries an ``exit_code`` so the command line front end can map
failures onto its documented exit-code table without a lookup of its own.
"""


class HomIndexError(Exception):
    exit_code = 1


class ContextMismatchError(HomIndexError, ValueError):
    """Operands live in different polynomial rings."""


class PrecisionMismatchError(HomIndexError, ValueError):
    """Truncated series of different precision were combined where equal precision is required."""


class PoleError(HomIndexError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class GermSyntaxError(HomIndexError):
    exit_code = 3

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class GermSemanticError(HomIndexError):
    exit_code = 3


class PreconditionError(HomIndexError):
    exit_code = 4


class NotAStandardBasisError(PreconditionError):
    pass


class NonHomogeneousError(PreconditionError):
    pass


class NonPolynomialEulerError(PreconditionError):
    """The alternating sum of Poincare series did not collapse to a polynomial."""


class NonIsolatedError(HomIndexError):
    exit_code = 5


class ResourceLimitError(HomIndexError):
    exit_code = 6


class UndeterminedOrderError(HomIndexError):
    """A series vanished to the working precision, so its order is unknown."""

    exit_code = 7


class NotStabilizedError(HomIndexError):
    """A truncated linear-algebra count did not settle within the allowed bound."""

    exit_code = 7


class GenericityError(HomIndexError):
    exit_code = 7
