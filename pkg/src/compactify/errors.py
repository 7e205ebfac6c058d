"""Exception types shared across the package."""


class CompactifyError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(CompactifyError, ValueError):
    """Invalid root-system or lattice description."""


class ParseError(CompactifyError, ValueError):
    """Malformed textual input; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(message)
        self.text = text
        self.position = position

    def to_dict(self) -> dict:
        return {"error": "parse", "message": str(self), "input": self.text, "position": self.position}


class NotDominantError(CompactifyError, ValueError):
    pass


class NotInLatticeError(CompactifyError, ValueError):
    pass


class NotSimpleError(CompactifyError, ValueError):
    """The weight set has no unique maximal element for rational dominance."""


class ResourceCapError(CompactifyError, RuntimeError):
    """An enumeration or decomposition would exceed the configured cap."""
