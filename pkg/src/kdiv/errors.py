"""Exception hierarchy shared by every kdiv module."""


class KdivError(ValueError):
    """Base class for domain errors raised by kdiv."""


class ZeroInput(KdivError):
    pass


class NotPrime(KdivError):
    pass


class NegativeValuation(KdivError):
    """The l-part of a quantity that must be an l-power >= 1 came out fractional."""


class HypothesisViolation(KdivError):
    """A formula was invoked outside the range where it is stated."""


class CharacteristicClash(HypothesisViolation):
    """The prime l equals the characteristic of the field."""


class PoleEvaluation(KdivError):
    pass


class InvalidCurve(HypothesisViolation):
    pass
