"""Exception taxonomy shared by every module in the package.

All errors raised on purpose derive from LatkitError so callers can catch one
base class at an API boundary.  Constructor arguments are kept as attributes
so programmatic callers do not have to parse messages.
"""

from __future__ import annotations


class LatkitError(Exception):
    """Base class for all package errors."""


class CycleDetected(LatkitError):
    """The cover relation contains a directed cycle."""

    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation contains a cycle through: {' -> '.join(self.cycle)}")


class UnknownLabel(LatkitError):
    """A label was referenced that is not an element of the poset."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"unknown element label: {label!r}")


class DuplicateLabel(LatkitError):
    """The same label appears more than once in an element list."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"duplicate element label: {label!r}")


class SizeLimit(LatkitError):
    """An enumeration was refused because the input exceeds its size guard."""

    def __init__(self, operation: str, limit: int, actual: int):
        self.operation = operation
        self.limit = limit
        self.actual = actual
        super().__init__(
            f"{operation}: size {actual} exceeds limit {limit}; pass a larger size_limit to override"
        )


class NotALattice(LatkitError):
    """Some pair of elements lacks a join or a meet."""

    def __init__(self, pair: tuple[str, str], reason: str):
        self.pair = (pair[0], pair[1])
        self.reason = reason
        super().__init__(f"not a lattice: pair {self.pair} has {reason}")


class NotIrreducible(LatkitError):
    """A duplication site is not doubly irreducible in the ambient lattice."""

    def __init__(self, site: str, failed: tuple[str, ...], step: int | None = None):
        self.site = site
        self.failed = tuple(failed)
        self.step = step
        where = f" at iteration {step}" if step is not None else ""
        super().__init__(
            f"element {site!r} is not {' or '.join(self.failed)}-irreducible{where}"
        )


class AllZero(LatkitError):
    """A vector that must have a nonzero entry is identically zero."""

    def __init__(self) -> None:
        super().__init__("vector is identically zero; truncation index is undefined")


class EmptyVector(LatkitError):
    """An operation received an empty vector."""

    def __init__(self) -> None:
        super().__init__("vector is empty")


class TrailingZero(LatkitError):
    """A vector that must be truncated still ends in zero entries."""

    def __init__(self) -> None:
        super().__init__("vector has trailing zeros; truncate it first")


class ParseError(LatkitError):
    """Input text is not well formed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"parse error{where}: {message}")


class SchemaError(LatkitError):
    """Parsed input does not match the document schema."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"schema error in {field!r}: {message}")


class GenerationFailed(LatkitError):
    """A random generator exhausted its retry budget."""

    def __init__(self, what: str, attempts: int):
        self.what = what
        self.attempts = attempts
        super().__init__(f"failed to generate {what} after {attempts} attempts")


class IrreducibilityLost(LatkitError):
    """An iterated construction broke one of its own invariants.

    This signals an internal contract violation, not bad user input.
    """

    def __init__(self, site: str, step: int, detail: str):
        self.site = site
        self.step = step
        self.detail = detail
        super().__init__(f"invariant lost at iteration {step} for site {site!r}: {detail}")


class SearchExhausted(LatkitError):
    """A bounded search reached its cap without finding the target."""

    def __init__(self, what: str, bound: int):
        self.what = what
        self.bound = bound
        super().__init__(f"{what}: no result within bound {bound}")
