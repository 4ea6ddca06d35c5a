"""Exception types shared across the library."""


class SkewnormError(Exception):
    """Base class for all library errors."""

    code = "error"


class TagMismatch(SkewnormError):
    code = "tag-mismatch"


class DivisionByZero(SkewnormError):
    code = "division-by-zero"


class MalformedAutomorphism(SkewnormError):
    code = "malformed-automorphism"


class ZeroBound(SkewnormError):
    code = "zero-bound"


class RingMismatch(SkewnormError):
    code = "ring-mismatch"


class ZeroPolynomial(SkewnormError):
    code = "zero-polynomial"


class NotAutomorphic(SkewnormError):
    """Raised when an element twists different base elements by different
    automorphisms; carries the two conflicting twists as diagnostics."""

    code = "not-automorphic"

    def __init__(self, message, twist_a=None, twist_b=None):
        super().__init__(message)
        self.twist_a = twist_a
        self.twist_b = twist_b


class NonCommutingPoint(SkewnormError):
    code = "non-commuting-point"


class AutomorphismMismatch(SkewnormError):
    code = "automorphism-mismatch"


class NotInF(SkewnormError):
    code = "not-in-f"


class NonCentralRing(SkewnormError):
    code = "non-central-ring"


class DegreeBoundViolated(SkewnormError):
    code = "degree-bound-violated"


class GridTooSmall(SkewnormError):
    code = "grid-too-small"


class NotHomogeneous(SkewnormError):
    code = "not-homogeneous"


class OracleInconsistent(SkewnormError):
    code = "oracle-inconsistent"


class ModeMismatch(SkewnormError):
    code = "mode-mismatch"


class ExponentEqualityFails(SkewnormError):
    code = "exponent-equality-fails"


class UnsupportedAutoShape(SkewnormError):
    code = "unsupported-auto-shape"


class ZeroElement(SkewnormError):
    code = "zero-element"


class WitnessHypothesisFails(SkewnormError):
    code = "witness-hypothesis-fails"


class CommutationRequired(SkewnormError):
    code = "commutation-required"


class NoSolution(SkewnormError):
    code = "no-solution"


class UnknownVerb(SkewnormError):
    code = "unknown-verb"


class UnknownDemo(SkewnormError):
    code = "unknown-demo"


class SchemaViolation(SkewnormError):
    code = "schema-violation"
