"""Exception types shared across the toolkit."""


class BraidRepError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(BraidRepError, ValueError):
    """Operands have incompatible dimensions."""


class SingularMatrixError(BraidRepError, ValueError):
    """A matrix that must be invertible is not."""


class NotARepresentationError(BraidRepError, ValueError):
    """Input matrices fail a property every genuine representation has."""


class PreconditionError(BraidRepError, ValueError):
    """An operation was called outside its stated domain."""


class NeedsFieldExtensionError(BraidRepError):
    """The construction requires an eigenvalue that is not rational."""


class TrichotomyViolationError(BraidRepError):
    """A full friendship graph fits none of the three admissible shapes."""


class ReducibleSignal(BraidRepError):
    """A construction ran into evidence that the input is reducible.

    Carries an optional invariant-subspace candidate in ``witness``.  The
    candidate is not verified here; callers that promote it to a verdict
    must check invariance themselves.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SpecParseError(BraidRepError, ValueError):
    """A builtin representation spec string could not be parsed."""
