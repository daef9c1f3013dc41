class InvsubstError(Exception):
    pass


class ParseError(InvsubstError, ValueError):
    pass


class EmptyWordError(InvsubstError, ValueError):
    pass


class NotInvertibleError(InvsubstError, ValueError):
    pass


class NegativeEntryError(InvsubstError, ValueError):
    pass


class ResourceError(InvsubstError, RuntimeError):
    """A search exceeded its node budget or an enumeration bound its cap."""


class InternalContradiction(InvsubstError, RuntimeError):
    """A state the theory rules out was reached; signals a bug, not bad input."""


class NoPatternError(InvsubstError, ValueError):
    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason
