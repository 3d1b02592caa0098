"""Exception hierarchy shared by every module of the package."""


class UpwordError(ValueError):
    """Base class for all errors raised by :mod:`upwords`."""


class EmptyWord(UpwordError):
    pass


class OutOfAlphabet(UpwordError):
    pass


class BadWindow(UpwordError):
    pass


class BinaryOnly(UpwordError):
    pass


class TooLarge(UpwordError):
    pass


class BadParams(UpwordError):
    pass


class BadVertex(UpwordError):
    pass


class BadEdgeWord(UpwordError):
    pass


class EmptyWalk(UpwordError):
    pass


class NoEulerianPath(UpwordError):
    """Raised when the requested Eulerian path does not exist.

    ``reason`` is either ``"degree"`` or ``"disconnected"``.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"no Eulerian path ({reason}){': ' + detail if detail else ''}")


class Contradiction(UpwordError):
    """Constraint propagation proved that a template admits no upword."""

    def __init__(self, theorem: str, detail: str):
        self.theorem = theorem
        self.detail = detail
        super().__init__(f"{theorem}: {detail}")


class CountMismatch(UpwordError):
    """The window-count identity fails for a template."""

    def __init__(self, expected: int, actual: int, detail: str = ""):
        self.expected = expected
        self.actual = actual
        msg = f"window count {actual} != {expected}"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class ConstructionFailed(RuntimeError):
    """A constructor produced a word that failed self-verification (a bug)."""
