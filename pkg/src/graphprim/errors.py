"""Exception hierarchy.

Every error raised by the library derives from :class:`GraphPrimError`.  The
CLI maps the three families below onto exit codes (parse: 1,
precondition: 2, size: 4).
"""


class GraphPrimError(Exception):
    """Base class for all library errors."""


# -- parsing -----------------------------------------------------------------

class ParseError(GraphPrimError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MalformedLine(ParseError):
    pass


class ZeroMultiplicity(ParseError):
    pass


class UnknownToken(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


# -- preconditions -----------------------------------------------------------

class PreconditionError(GraphPrimError):
    """An operation was called outside its domain."""


class UnknownVertex(PreconditionError):
    pass


class NotHereditarySaturated(PreconditionError):
    pass


class NotATail(PreconditionError):
    pass


class NotT1(PreconditionError):
    pass


class NotPurelyInfinite(PreconditionError):
    pass


class NotRowFinite(PreconditionError):
    pass


class ConditionKRequired(PreconditionError):
    pass


class InvalidSubset(PreconditionError):
    pass


class InvalidSpec(PreconditionError):
    pass


class UnrepresentableComplement(PreconditionError):
    """The complement of a finite circle set is cofinite, which has no symbolic form."""


class NonUniqueGeneratingLoop(PreconditionError):
    """A candidate tail has two rotation-inequivalent exit-free loops."""


# -- size --------------------------------------------------------------------

class TooLarge(GraphPrimError):
    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(f"graph has {n} vertices, bound is {bound}")
