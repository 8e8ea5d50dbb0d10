"""Exception types shared across the package."""


class GradalgError(Exception):
    """Base class for every error raised by this library."""


class IndexKindError(GradalgError, TypeError):
    """Semigroup indices of different kinds were combined."""


class AlgebraMismatchError(GradalgError, ValueError):
    """Elements of different algebras were combined."""


class LevelGapError(GradalgError, ValueError):
    """Level pair violates the required separation p > q + gap."""


class DivergenceError(GradalgError, ArithmeticError):
    """A sum or integral diverges for the requested parameters."""


class NotSubmultiplicativeError(GradalgError, ArithmeticError):
    """The weight family fails submultiplicativity, so no coupling constant
    certifies the convolution inequality for it."""


class UnsupportedFamilyError(GradalgError, ValueError):
    """The operation has no certified computation scheme for this family."""


class SeriesRadiusError(GradalgError, ArithmeticError):
    """No scanned level pair places the argument inside the series radius."""


class TailCertificationError(GradalgError, ValueError):
    """A truncation tail cannot be certified with the information provided."""


class NotInvertibleError(GradalgError, ArithmeticError):
    """The element is certified non-invertible."""


class InversionInconclusiveError(GradalgError, ArithmeticError):
    """Invertibility could not be decided within the search budget."""


class SupportCapError(GradalgError, RuntimeError):
    """An intermediate support grew past the configured cap."""
