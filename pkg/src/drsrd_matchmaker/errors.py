"""
Exception hierarchy for the matchmaker.

Every error raised on purpose by this package derives from DiscoveryError, so the
CLI and the Broker routes can turn them into diagnostics in one place.
"""

from typing import Optional


class DiscoveryError(Exception):
    """Base class for all matchmaker errors."""


class LocatedError(DiscoveryError):
    """An error tied to a line of an input document."""

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is None:
            return f"{self.source}: {self.message}" if self.source else self.message
        return f"{self.source or '<input>'}:{self.line}: {self.message}"


class RoughSetError(DiscoveryError):
    """Precondition violated by an information-table operation."""


class UnknownAttributeError(RoughSetError):
    """Attribute is not a column of the information table."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown attribute: {name!r}")


class UnknownObjectError(RoughSetError):
    """Object is not a row of the information table."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown object: {name!r}")


class TransferError(RoughSetError):
    """Transfer coefficient evaluated on the wrong side of the target set."""


class TaxonomyError(LocatedError):
    """Malformed or inconsistent taxonomy document."""


class UnknownClassError(DiscoveryError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown class: {name!r}")


class UnknownPropertyError(DiscoveryError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown property: {name!r}")


class RequestError(LocatedError):
    """Invalid resource request or discovery parameters."""


class ValueTypeError(DiscoveryError):
    """Advertised value does not have the type declared by its property."""


class RepositoryError(DiscoveryError):
    """Registry mutation or persistence failure."""


class RecordParseError(RepositoryError, LocatedError):
    """Malformed line in a record file."""


class ExperimentError(DiscoveryError):
    """Invalid experiment setup."""
