"""Exception types raised across the package."""


class CTreeError(Exception):
    """Base class for all package errors."""


class PreconditionError(CTreeError, ValueError):
    """An operation was called on inputs outside its domain."""


class DenominatorNotInvertible(PreconditionError):
    pass


class UnassignedVariable(PreconditionError):
    pass


class WrongFinalLetter(PreconditionError):
    pass


class NotH1Shape(PreconditionError):
    pass


class IdCollision(PreconditionError):
    pass


class InvalidVertex(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class IsLinear(PreconditionError):
    pass


class NotHarvestable(PreconditionError):
    pass


class NotAdmissible(PreconditionError):
    pass


class BadWordShape(PreconditionError):
    pass


class BadResidueClass(PreconditionError):
    pass


class NotLinear(PreconditionError):
    pass


class ParseError(PreconditionError):
    pass


class CycleDetected(ParseError):
    pass


class Disconnected(ParseError):
    pass


class NonvanishingPiZero(CTreeError, ArithmeticError):
    """The degree-zero part of a loop integral did not cancel."""
