"""Error types shared by every thinbrace module.

The CLI maps them onto exit codes: InputError -> 2, ResourceError -> 3.
DomainError is kept apart from InputError so callers can tell an undefined
notion (tight cut of a graph that is not matching covered) from malformed input.
"""


class ThinbraceError(Exception):
    """Base class for all thinbrace errors."""


class InputError(ThinbraceError, ValueError):
    """Malformed or unknown input: bad vertex id, unknown graph name, unmet hypothesis."""


class ParseError(InputError):
    """Graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(ThinbraceError):
    """The requested notion is undefined for this graph (e.g. not matching covered)."""


class ResourceError(ThinbraceError):
    """An enumeration cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
