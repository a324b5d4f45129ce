"""Shared exception types."""


class HomLabError(Exception):
    """Base class for all homlab-specific errors."""


class SizeBoundError(HomLabError):
    """An input exceeds the size bound of the requested computation."""


class GraphParseError(HomLabError):
    """Malformed graph text; carries the character offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FormulaParseError(HomLabError):
    """Malformed formula text; carries the character offset of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ProbeSearchError(HomLabError):
    """Witness construction exhausted its probe candidates or retry budget."""
