"""Exception types."""


class MeasureError(Exception):
    """Base class for errors raised by this package."""


class NonIntegrable(MeasureError):
    """A pairing's truncation error could not be certified below tolerance."""


class TailBoundFailure(NonIntegrable):
    """Tail of a lattice or density pairing against a slowly decaying test
    function exceeds the tolerance within the truncation cap."""


class UnboundedLocalMass(MeasureError):
    """``|mu|(t + K)`` diverges for the requested measure."""


class NotTransformableInModel(MeasureError):
    """A measure component has no Fourier rule in the closed-form model.

    ``component`` holds the offending term.
    """

    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class NoClosedForm(MeasureError):
    """A test function has no closed-form (inverse) Fourier transform."""


class SupportViolation(MeasureError):
    """Kernel support leaves the prescribed compact set."""


class WindowConstructionFailure(MeasureError):
    """No tent in the search range minorises the indicator of ``K``."""


class InconsistencyDetected(MeasureError):
    """Verdicts contradict an implication that is a theorem."""


class PDCheckFailure(MeasureError):
    """A member fails the positive-definiteness necessary condition."""


class UnknownExample(KeyError):
    """Requested example id is not in the registry."""
