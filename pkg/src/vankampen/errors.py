"""Exception hierarchy shared by all modules."""


class VanKampenError(Exception):
    """Base class for every error raised by the package."""


class Degenerate(VanKampenError):
    """Input is not in general position.

    ``witness`` carries the offending configuration when one is known
    (a collinear triple, three concurrent segments, touching segments, ...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCrossing(VanKampenError):
    pass


class OnCurve(VanKampenError):
    pass


class BadProfile(VanKampenError):
    """The objects of an r-fold intersection match neither admissible profile."""


class BadSize(VanKampenError):
    pass


class TooLarge(VanKampenError):
    pass


class Exhausted(VanKampenError):
    pass


class Incidence(VanKampenError):
    pass


class IndexMismatch(VanKampenError):
    pass


class HostMismatch(VanKampenError):
    pass


class ParseError(VanKampenError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
