"""Exception hierarchy shared by every module of the package."""


class RaagError(Exception):
    """Base class for all errors raised by raagvc."""


class ParseError(RaagError, ValueError):
    """Malformed graph, word or automorphism text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertexError(RaagError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown vertex {self.name!r}"


class BudgetExceeded(RaagError):
    """A bounded search hit its configured cap without an answer."""


class NotAnAutomorphism(RaagError, ValueError):
    """An endomorphism failed the homomorphism or explicit-inverse check."""


class NotVertexConjugating(RaagError, ValueError):
    """Some vertex is sent outside its own conjugacy class."""

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"image of vertex {vertex!r} is not conjugate to {vertex!r}")


class InvalidGeneratorError(RaagError, ValueError):
    """Data that does not describe a partial conjugation or Whitehead automorphism."""
