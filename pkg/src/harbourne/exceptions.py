"""
Custom exceptions for Harbourne
"""


class HarbourneError(Exception):
    """Base exception for Harbourne operations"""

    exit_code = 1


class NotOrdinary(HarbourneError):
    """The operation needs an arrangement with only ordinary singularities"""
    pass


class WrongSurface(HarbourneError):
    """The operation is defined only on another kind of surface"""
    pass


class NoSingularities(HarbourneError):
    """The arrangement has no singular points (f0 = 0)"""
    pass


class EmptyPointSet(HarbourneError):
    """A Harbourne quotient was requested over an empty point set"""
    pass


class BadMultiplicity(HarbourneError):
    """A point multiplicity is outside the range the formula covers"""
    pass


class BadInput(HarbourneError):
    """An argument violates the operation's precondition"""
    pass


class BadOrder(HarbourneError):
    """A branching order has no refined Miyaoka bound"""
    pass


class NotElliptic(HarbourneError):
    """A component is not an elliptic curve"""
    pass


class BadParameter(HarbourneError):
    """A family parameter or a sweep range is invalid"""

    exit_code = 2


class ParseError(HarbourneError):
    """An arrangement document is malformed"""

    exit_code = 2


class ValidationError(HarbourneError):
    """An arrangement violates a hard invariant"""

    def __init__(self, message: str, errors=()):
        super().__init__(message)
        self.errors = tuple(errors)


class UnknownCatalogName(HarbourneError):
    """A catalog:name target does not resolve"""

    exit_code = 2
