"""Exception types shared across the package."""


class HeckecharError(Exception):
    pass


# -- certified arithmetic ----------------------------------------------------

class BallContainsZero(HeckecharError):
    """A ball straddling 0 was used where a definite sign/value is required."""


class PrecisionCeiling(HeckecharError):
    """Adaptive precision exceeded the configured maximum."""


# -- exact linear algebra ----------------------------------------------------

class DimensionMismatch(HeckecharError):
    pass


class SingularMatrix(HeckecharError):
    pass


class ZeroVector(HeckecharError):
    pass


class NonIntegralPairing(HeckecharError):
    """A pairing that must be an integer failed to snap to one."""


# -- number fields -----------------------------------------------------------

class ZeroElement(HeckecharError):
    pass


class IndexDivisor(HeckecharError):
    """Prime divides the index [Z_F : Z[theta]] and no override was supplied."""

    def __init__(self, p):
        super().__init__(f"prime {p} divides the equation order index")
        self.p = p


class NotAUnit(HeckecharError):
    pass


class NotCM(HeckecharError):
    pass


# -- field oracle ------------------------------------------------------------

class BoundExceeded(HeckecharError):
    pass


class SchemaError(HeckecharError):
    pass


class InvariantViolation(HeckecharError):
    pass


class NotCoprime(HeckecharError):
    pass


class OracleIncomplete(HeckecharError):
    pass


# -- character groups --------------------------------------------------------

class RankDeficiency(HeckecharError):
    pass


class InvalidPlace(HeckecharError):
    pass


# -- L-function data ---------------------------------------------------------

class NormComponentNonzero(HeckecharError):
    pass


class WrongFieldShape(HeckecharError):
    pass


class WrongType(HeckecharError):
    pass


class MissingFactorization(HeckecharError):
    pass


class NoAlgebraicOfType(HeckecharError):
    pass
