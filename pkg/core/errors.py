# core/errors.py
from __future__ import annotations


class InvariantError(ValueError):
    """Base class for bad input: malformed text, unsupported subjects, invalid slopes."""


class PolySyntaxError(InvariantError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        where = f" at position {position}" if text else ""
        super().__init__(f"{message}{where}")

    def pointer(self) -> str:
        """Two-line rendering with a caret under the offending character."""
        if not self.text:
            return str(self)
        return f"{self.text}\n{' ' * self.position}^"


class NotSymmetricError(InvariantError):
    pass


class MultiComponentError(InvariantError):
    pass


class SubjectSyntaxError(InvariantError):
    pass


class NotInCatalogError(InvariantError):
    pass


class LinkingNumberError(InvariantError):
    pass


class SlopeError(InvariantError):
    pass


class ConsistencyError(RuntimeError):
    """An exact computation contradicted itself; always a bug, never bad input."""


__all__ = [
    "InvariantError",
    "PolySyntaxError",
    "NotSymmetricError",
    "MultiComponentError",
    "SubjectSyntaxError",
    "NotInCatalogError",
    "LinkingNumberError",
    "SlopeError",
    "ConsistencyError",
]
