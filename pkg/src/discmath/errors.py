"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(ValueError):
    """Malformed textual input.

    ``position`` is a 0-based character offset (or, for token lists, a
    1-based token index) locating the offending input.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
