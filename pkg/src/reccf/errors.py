"""Exception hierarchy shared by the library and the CLI."""


class ReccfError(Exception):
    """Base class for every error raised by reccf."""


class DomainError(ReccfError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InvalidRootError(DomainError):
    pass


class InvalidThresholdError(DomainError):
    pass


class UndefinedQuotientError(DomainError, ZeroDivisionError):
    pass


class DegenerateExpansionError(DomainError):
    """A continued fraction would require inverting a zero partial quotient."""


class ParseError(ReccfError, ValueError):
    """Malformed power-sum expression; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class NonpositiveBaseError(ParseError):
    pass


class ZeroDenominatorError(ParseError):
    pass
