"""Exceptions shared across the package."""


class ExpordError(Exception):
    """Base class for every error this package raises deliberately."""


class DimensionMismatch(ExpordError):
    """Operands have incompatible shapes."""


class EmptyMatrix(ExpordError):
    """Matrices and vectors must have at least one row and one column."""


class NegativeEntry(ExpordError):
    """A stochastic object contains an entry below zero."""

    def __init__(self, row, col, value):
        super().__init__(f"negative entry {value} at row {row}, column {col}")
        self.row = row
        self.col = col
        self.value = value


class ColumnSumNotOne(ExpordError):
    """An experiment column does not sum to exactly one."""

    def __init__(self, col, total):
        super().__init__(f"column {col} sums to {total}, expected exactly 1")
        self.col = col
        self.total = total


class InvalidDistribution(ExpordError):
    """A prior must be nonnegative and sum to exactly one."""


class InvalidGarbling(ExpordError):
    """A garbling matrix fails nonnegativity or its stochasticity sums."""


class PreconditionViolated(ExpordError):
    """The caller asked for a construction whose precondition does not hold."""


class InternalInvariantError(ExpordError):
    """A computed certificate failed its own consistency check (a bug)."""


class InputError(ExpordError):
    """A file failed to parse or validate; carries location context."""

    def __init__(self, message, path=None, line=None, col=None):
        where = ""
        if path is not None:
            where = str(path)
            if line is not None:
                where += f":{line}"
                if col is not None:
                    where += f":{col}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line
        self.col = col
