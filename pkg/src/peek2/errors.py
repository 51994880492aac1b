"""Exception types shared across the package."""


class InvalidUtf8(ValueError):
    """Input is not well-formed UTF-8 (or a str contains lone surrogates)."""


class OracleGap(RuntimeError):
    """The reference splitter failed to match at some position.

    The split pattern is supposed to match at every position of every
    input; a gap means the engine dialect diverged and the run must abort
    loudly rather than skip bytes.
    """


class ParseError(ValueError):
    """A model file could not be parsed."""


class InvalidModel(ValueError):
    """A parsed model violates its structural invariants."""


class MissingFixture(FileNotFoundError):
    """A benchmark corpus or model fixture is absent or empty."""


class ClockError(RuntimeError):
    """The timing source misbehaved (non-monotonic / negative duration)."""
