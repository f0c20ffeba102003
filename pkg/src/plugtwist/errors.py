"""Exception types shared across the package."""


class TwistCalcError(ValueError):
    """Base class; the CLI maps these to a user error."""


class IllegalSite(TwistCalcError):
    pass


class ZeroInput(TwistCalcError):
    pass


class WrongKind(TwistCalcError):
    pass


class OddP(TwistCalcError):
    pass


class DomainError(TwistCalcError):
    pass


class NotCoprime(TwistCalcError):
    pass


class BadName(TwistCalcError):
    pass


class DimensionMismatch(TwistCalcError):
    pass


class BoundTooLarge(TwistCalcError):
    pass


class ParityError(TwistCalcError):
    pass


class ParityMismatch(TwistCalcError):
    pass


class NonIntegerCoefficient(ArithmeticError):
    """An expanded half-integer product failed to be integral."""


class DegenerateClosure(UserWarning):
    """Emitted when a closure is split and its Alexander polynomial vanishes."""
