"""Exception hierarchy. Every error raised by the package derives from GenposError."""


class GenposError(ValueError):
    pass


class DisconnectedGraph(GenposError):
    pass


class UnreachablePair(GenposError):
    pass


class InvalidVertex(GenposError):
    pass


class WrongDiameter(GenposError):
    pass


class NotACover(GenposError):
    pass


class NotIsometric(GenposError):
    pass


class ArityMismatch(GenposError):
    pass


class DisconnectedGadget(GenposError):
    pass


class InvalidCoordinate(GenposError):
    pass


class InvalidParameter(GenposError):
    pass


class InvalidSpec(GenposError):
    pass


class TooLarge(GenposError):
    pass


class MalformedHeader(GenposError):
    pass


class TrailingBits(GenposError):
    pass


class BadToken(GenposError):
    pass


class VertexOutOfRange(GenposError):
    pass


class SelfLoop(GenposError):
    pass


class UnknownClaimId(GenposError):
    pass


class BudgetExceeded(GenposError):
    """Raised by strict callers; the explorer itself reports partial results."""

    def __init__(self, message, cursor=None):
        super().__init__(message)
        self.cursor = cursor
