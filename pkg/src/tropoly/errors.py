"""Exception hierarchy shared across the library."""


class TropolyError(Exception):
    """Base class for all library errors."""


class DomainError(TropolyError):
    """An operation was applied outside its domain (e.g. factoring the
    zero polynomial, or evaluating at infinity)."""


class ParseError(TropolyError):
    """Malformed textual input.

    `position` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
