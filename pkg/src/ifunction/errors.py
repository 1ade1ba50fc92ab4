"""Exception hierarchy shared by all evaluation layers."""


class IFunctionError(Exception):
    """Base class for every error raised by this package."""


class DomainError(IFunctionError, ValueError):
    """An argument lies outside the domain of the operation."""


class ValidationError(IFunctionError, ValueError):
    """Parameters violate the structural conditions of the I-function."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid parameters")


class SingularityError(IFunctionError, ValueError):
    """Evaluation point sits on a gamma singularity."""

    def __init__(self, message, factor=None):
        self.factor = factor
        super().__init__(message)


class ContourError(IFunctionError):
    """No admissible vertical contour could be placed."""


class NonConvergentError(IFunctionError):
    """An integral or series failed to converge to the requested tolerance."""


class PreconditionError(IFunctionError):
    """A residue procedure was called outside its hypotheses."""


class HigherOrderPoleError(PreconditionError):
    """Simple-pole series requested where poles have higher order."""


class UnsupportedOrderError(PreconditionError):
    """Pole multiplicity beyond what the Laurent machinery supports."""


class NoAdmissibleMethodError(IFunctionError):
    """The dispatcher found no method whose convergence is guaranteed."""

    def __init__(self, reasons):
        self.reasons = dict(reasons)
        text = "; ".join(f"{k}: {v}" for k, v in self.reasons.items())
        super().__init__(f"no admissible method ({text})")
