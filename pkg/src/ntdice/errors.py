"""Exception types raised across the package."""


class InvalidInputError(ValueError):
    """Arguments violate an operation's precondition."""


class UnsupportedBaseError(InvalidInputError):
    """A dice set cannot be extended by single-label raises alone."""


class NotStrongError(InvalidInputError):
    """A digraph that must be strongly connected is not.

    ``components`` holds the strong components found, dominant first.
    """

    def __init__(self, message, components=()):
        super().__init__(message)
        self.components = tuple(components)


class CostGuardError(InvalidInputError):
    """An exhaustive routine was asked to run past its size limit."""


class ConstructionError(RuntimeError):
    """An internal invariant of a construction failed. Indicates a bug."""


class ParseError(InvalidInputError):
    """A text file does not follow its declared format."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
