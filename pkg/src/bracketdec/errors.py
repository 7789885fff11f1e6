"""Exception types shared across the package."""


class BracketDecError(Exception):
    """Base class for all package errors."""


class ParseError(BracketDecError):
    """Malformed polynomial, element, curve, or pair-list text."""


class ValidationError(BracketDecError):
    """An input fails one of the documented preconditions."""


class NotSmooth(ValidationError):
    """The plane curve has a singular point: no unit certificate for its Jacobian ideal."""


class BadVariables(ValidationError):
    """A polynomial uses variables outside the curve's coordinate ring."""


class DoesNotPreserveIdeal(ValidationError):
    """The candidate derivation does not map the curve ideal into itself."""


class UnitCertificateAbsent(ValidationError):
    """The derivation's components do not generate the unit ideal modulo the curve."""


class ZeroTau(ValidationError):
    """The candidate trivializing field vanishes identically on the curve."""


class CurveMismatch(ValidationError):
    """Operands live on different curves."""


class CertificateFailure(ValidationError):
    """A constructed certificate or decomposition failed its own verification."""


class StepBudgetExceeded(BracketDecError):
    """The configured reduction-step budget was exhausted."""
