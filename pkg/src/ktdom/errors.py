"""Exception types shared across the package."""

from __future__ import annotations


class KtdomError(Exception):
    """Base class for all errors raised by ktdom."""

    code = "error"


class ParameterError(KtdomError, ValueError):
    """A constructor or formula received parameters outside its domain."""

    code = "parameter"


class ParseError(KtdomError, ValueError):
    """Malformed graph or hypergraph text."""

    code = "parse"

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(KtdomError, ValueError):
    """The instance does not satisfy a mathematical precondition (e.g. delta < k)."""

    code = "domain"


class InapplicableError(DomainError):
    """A closed form has an empty feasible set for the given parameters."""

    code = "inapplicable"


class ResourceError(KtdomError, RuntimeError):
    """The instance is too large for exact search under the configured limit."""

    code = "resource"


class SolveTimeout(KtdomError, TimeoutError):
    """The per-instance time budget ran out."""

    code = "timeout"
