"""Exception types shared across the package."""


class EicpError(Exception):
    """Base class for all errors raised by this library."""


class NotPositiveDefinite(EicpError):
    """A Cholesky pivot fell at or below the pivot tolerance."""


class NonConvergence(EicpError):
    """The symmetric eigensolver failed to converge (pathological input)."""


class DimensionMismatch(EicpError):
    """Operands have incompatible or unsupported dimensions."""


class DimensionTooLarge(EicpError):
    """The requested exact computation exceeds its dimension cap."""


class NegativeShift(EicpError):
    """A spectral shift amount must be nonnegative."""


class ParamOutOfRange(EicpError):
    """A family parameter violates its admissible range."""


class HypothesisViolation(EicpError):
    """A gated operation was called without its certified hypotheses."""


class NegativeDiscriminant(EicpError):
    """A localization quadratic has a discriminant below -disc_tol."""


class NoRealRoot(EicpError):
    """Bracketed root search found no sign change."""


class NotCommuting(EicpError):
    """The matrix pair does not commute within tolerance."""


class ParseError(EicpError):
    """An instance or report document is malformed."""


class DimensionError(ParseError):
    """An instance file declares inconsistent array dimensions."""
