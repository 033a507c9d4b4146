class QuantisationError(Exception):
    pass


class UnknownType(QuantisationError):
    pass


class DimensionMismatch(QuantisationError):
    pass


class NotDominant(QuantisationError):
    pass


class NotWeylInvariant(QuantisationError):
    pass


class DatumMismatch(QuantisationError):
    pass


class LatticeMismatch(QuantisationError):
    pass


class MissingWitness(QuantisationError):
    """The series is not certified to lie in R^{-oo}(K)_{K'}."""


class NoWitnessAvailable(QuantisationError):
    pass


class OddDimension(QuantisationError):
    pass


class NotStronglyElliptic(QuantisationError):
    pass


class NotFinitelySupported(QuantisationError):
    pass


class PropernessUncertified(QuantisationError):
    pass


class DegreeBoundMissing(QuantisationError):
    pass


class NotPointedCone(QuantisationError):
    pass


class WindowTooNarrow(QuantisationError):
    """A windowed series was queried beyond the radius it is known on."""
