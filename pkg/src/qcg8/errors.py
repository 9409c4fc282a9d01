"""Exception hierarchy shared by all qcg8 modules."""


class QCG8Error(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class UnsupportedColumnWeight(QCG8Error):
    pass


class RowWeightTooSmall(QCG8Error):
    pass


class ChainMismatch(QCG8Error):
    pass


class IntegerOverflow(QCG8Error):
    pass


class InvalidCycleLength(QCG8Error):
    pass


class InvalidCirculantSize(QCG8Error):
    pass


class DegenerateTriple(QCG8Error):
    pass


class EquivalenceError(QCG8Error):
    """A '/d' operation whose divisor is illegal for the triple or circulant size."""


class EmptyRange(QCG8Error):
    pass


class AlistParseError(QCG8Error):
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


class WeightInconsistency(QCG8Error):
    pass


class DimensionMismatch(QCG8Error):
    pass


class InvalidConfig(QCG8Error):
    pass
