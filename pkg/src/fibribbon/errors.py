"""Exception hierarchy shared by every module.

All errors derive from :class:`FibError`, itself a ``ValueError``, so callers
that only care about "bad input" can catch ``ValueError``.
"""


class FibError(ValueError):
    pass


class ParseError(FibError):
    """Malformed text for a word, permutation or tableau."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class IncompatibleAlphabet(FibError):
    """Two objects built over different color counts ``k`` were combined."""


class NotACover(FibError):
    """A step that should be a Z(k) cover relation is not one."""

    def __init__(self, message: str, step: int | None = None):
        self.step = step
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class InvalidTableau(FibError):
    pass


class InsertionError(FibError):
    pass


class EnumerationTooLarge(FibError):
    def __init__(self, size: int, bound: int):
        self.size = size
        self.bound = bound
        super().__init__(f"refusing to enumerate {size} states (bound is {bound})")
