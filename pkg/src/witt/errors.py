"""Exception hierarchy shared by every module of the package."""


class WittError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotDivisible(WittError):
    pass


class NotUnique(WittError):
    """Division by an integer that is a zero divisor in the ring; the quotient is ambiguous."""


class UnsupportedRing(WittError):
    pass


class NotPrime(WittError):
    pass


class NotDivisorStable(WittError):
    def __init__(self, d, n):
        super().__init__(f"{d} divides {n} but is missing from the index set")
        self.d = d
        self.n = n


class ProfileMismatch(WittError):
    pass


class RingMismatch(WittError):
    pass


class NotInGhostImage(WittError):
    pass


class AmbiguousDivision(WittError):
    pass


class EmptyOutputProfile(ProfileMismatch):
    pass


class IntegralityViolation(WittError):
    """A universal polynomial acquired a non-integral coefficient. Always a bug."""


class PIntegralityViolation(IntegralityViolation):
    pass


class DivisibilityViolation(WittError):
    pass


class LevelTooLarge(WittError):
    """Universal polynomial requested beyond the configured size cap."""


class PreconditionError(WittError):
    pass


class ParseError(WittError):
    """Malformed textual input (ring, profile, element or vector syntax)."""
