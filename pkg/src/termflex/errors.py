"""Exception hierarchy shared by all termflex modules."""


class TermflexError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TermflexError):
    """Malformed input data (files, parameters, formats)."""


class CorpusError(InputError):
    """Problem with a vertical corpus file."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class QueryParseError(InputError):
    """Syntax error in a token-stream query."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)
        self.position = position


class ExprParseError(InputError):
    """Syntax error in a concept expression."""


class KBError(TermflexError):
    """Inconsistent knowledge-base state (cycles, unknown ids, ...)."""


class ValidationFailure(TermflexError):
    """Raised when explicit validation of user content fails."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))
