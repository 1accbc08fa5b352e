"""
All custom exceptions for the project.
"""


class OpenLPError(Exception):
    """Base exception for all openlp errors."""

    code = "E-INTERNAL"

    def __init__(self, message: str, details: dict | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ConfigurationError(OpenLPError):
    """Raised when configuration is invalid or missing."""

    code = "E-CONFIG"


class ParseError(OpenLPError):
    """Raised when program or query text does not match the grammar."""

    code = "E-PARSE"

    @property
    def line(self) -> int | None:
        return self.details.get("line")

    @property
    def column(self) -> int | None:
        return self.details.get("column")


class ArityError(ParseError):
    """Raised when a predicate or function symbol is used with two arities."""

    code = "E-ARITY"


class ReservedSymbolError(OpenLPError):
    """Raised when user input uses the prefix reserved for generated names."""

    code = "E-RESERVED"


class ScopeError(OpenLPError):
    """Raised when an input lies outside the scope an operation supports."""

    code = "E-SCOPE"


class EnumerationLimitError(OpenLPError):
    """Raised when an enumeration or grounding exceeds its configured cap."""

    code = "E-LIMIT"
