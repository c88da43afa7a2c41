"""Exception hierarchy shared by all modules."""


class DephasingError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(DephasingError, ValueError):
    pass


class NotHermitian(InvalidArgument):
    pass


class NotPositive(InvalidArgument):
    pass


class NoConvergence(DephasingError, ArithmeticError):
    pass


class InvalidTime(InvalidArgument):
    pass


class InvalidState(InvalidArgument):
    pass


class ConfigError(DephasingError):
    """Malformed or inconsistent configuration file.

    ``field`` is the dotted path of the offending entry, ``line`` the
    1-based line number when the problem is a JSON syntax error.
    """

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
