"""Exception types shared across the package."""


class BipfreeError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidGraph(BipfreeError):
    pass


class InvalidLabelling(BipfreeError):
    pass


class NotBipartite(BipfreeError):
    pass


class AmbiguousB(BipfreeError):
    """The maximum-black labellings of a graph are not all isomorphic."""


class InvalidParameter(BipfreeError):
    pass


class OverlappingSets(BipfreeError):
    pass


class OutOfRange(BipfreeError):
    pass


class MalformedExpression(BipfreeError):
    pass


class TooLarge(BipfreeError):
    pass


class EmptyH(BipfreeError):
    pass


class PreconditionViolated(BipfreeError):
    pass


class PostconditionFailed(AssertionError):
    """An internal postcondition check failed. Always a bug, never user error."""


class NotAStarForest(PostconditionFailed):
    pass


class UnsupportedCase(BipfreeError):
    pass


class UnknownSuite(BipfreeError):
    pass


class ParseError(BipfreeError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
