"""Exception types raised across the package."""


class HedgeresError(Exception):
    """Base class for all package errors."""


class ConfigError(HedgeresError):
    """An algebra configuration is malformed or a truth term is not part of it."""


class ParseError(HedgeresError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)


class ArityError(ParseError):
    pass


class EvaluationError(HedgeresError):
    """An interpretation does not cover a symbol that the evaluated formula uses."""


class EnumerationLimitExceeded(HedgeresError):
    """Brute-force search would exceed the configured evaluation cap."""


class ReplayError(HedgeresError):
    pass
