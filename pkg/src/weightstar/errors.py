"""Exception types.

Every error raised on purpose by the package derives from ``WeightStarError`` so
callers (and the CLI) can separate domain failures from programming errors.
"""


class WeightStarError(Exception):
    pass


# fields
class NonPrime(WeightStarError, ValueError):
    pass


class ReducibleModulus(WeightStarError, ValueError):
    pass


class FieldTooLarge(WeightStarError, ValueError):
    pass


class NoTableEntry(WeightStarError, LookupError):
    pass


class FieldMismatch(WeightStarError, ValueError):
    pass


class DivisionByZero(WeightStarError, ZeroDivisionError):
    pass


# linear algebra / codes
class DimensionMismatch(WeightStarError, ValueError):
    pass


class RankDeficient(WeightStarError, ValueError):
    pass


class EnumerationGuard(WeightStarError, RuntimeError):
    """Raised when an exhaustive scan would exceed the configured guard."""

    def __init__(self, needed, guard, what="messages"):
        self.needed = needed
        self.guard = guard
        super().__init__(f"enumeration of {needed} {what} exceeds guard {guard}")


class SubcodeGuard(EnumerationGuard):
    pass


class AllCoordinatesRemoved(WeightStarError, ValueError):
    pass


class ParameterMismatch(WeightStarError, ValueError):
    pass


class NotProjective(WeightStarError, ValueError):
    pass


# constructions
class NoSuchWeight(WeightStarError, ValueError):
    pass


class EmptySet(WeightStarError, ValueError):
    pass


class DimensionDropped(WeightStarError, ValueError):
    pass


class HypothesisViolated(WeightStarError):
    """A theorem check was asked to run on input that breaks one of its hypotheses.

    ``hypothesis`` names the first failing hypothesis; ``details`` carries the
    full per-hypothesis report.
    """

    def __init__(self, hypothesis, details=None):
        self.hypothesis = hypothesis
        self.details = details or {}
        super().__init__(f"hypothesis violated: {hypothesis}")


class EquivalenceUnknown(WeightStarError, RuntimeError):
    pass


# closed-form identities
class NonIntegralResult(WeightStarError, ArithmeticError):
    pass


class BoundViolated(WeightStarError, ValueError):
    pass


class BoundaryCase(WeightStarError, ValueError):
    pass


class DivisibilityViolated(WeightStarError, ArithmeticError):
    pass


# families / io / cli
class BadParams(WeightStarError, ValueError):
    pass


class OddCharacteristic(BadParams):
    pass


class ParseError(WeightStarError, ValueError):
    pass


class UnknownSuite(WeightStarError, LookupError):
    pass
