"""Exception hierarchy shared by every chronokit module."""

__all__ = [
    "ChronokitError",
    "InvalidParameter",
    "EmptyCollection",
    "CapabilityError",
    "NotFittedError",
    "SchemaMismatch",
    "ParseError",
    "ConsistencyError",
    "ChannelMismatch",
    "LengthMismatch",
    "InfeasibleBand",
    "UnsupportedKind",
    "TargetTooShort",
    "SeriesTooShort",
    "DegenerateFeatures",
    "KindMismatch",
    "InsufficientData",
    "DegenerateScale",
    "InvalidSpec",
    "CaseError",
]


class ChronokitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(ChronokitError, ValueError):
    pass


class EmptyCollection(ChronokitError, ValueError):
    pass


class CapabilityError(ChronokitError, ValueError):
    """Input data needs a capability the estimator does not declare.

    The :class:`~chronokit.core.ValidationReport` that triggered the error is
    available as ``report``.
    """

    def __init__(self, report, estimator=None):
        self.report = report
        self.estimator = estimator
        parts = [f"{v.tag}: {v.detail}" for v in report.violations]
        prefix = f"{estimator} " if estimator else ""
        super().__init__(prefix + "cannot handle input; " + "; ".join(parts))


class NotFittedError(ChronokitError, AttributeError):
    pass


class SchemaMismatch(ChronokitError, ValueError):
    """Predict-time data does not match what the estimator was fitted on."""

    def __init__(self, message, fitted=None, new=None):
        self.fitted = fitted
        self.new = new
        super().__init__(message)


class ParseError(ChronokitError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConsistencyError(ChronokitError, ValueError):
    pass


class ChannelMismatch(ChronokitError, ValueError):
    pass


class LengthMismatch(ChronokitError, ValueError):
    pass


class InfeasibleBand(ChronokitError, ValueError):
    pass


class UnsupportedKind(ChronokitError, ValueError):
    pass


class TargetTooShort(ChronokitError, ValueError):
    pass


class SeriesTooShort(ChronokitError, ValueError):
    pass


class DegenerateFeatures(ChronokitError, ValueError):
    pass


class KindMismatch(ChronokitError, ValueError):
    pass


class InsufficientData(ChronokitError, ValueError):
    pass


class DegenerateScale(ChronokitError, ValueError):
    pass


class InvalidSpec(ChronokitError, ValueError):
    pass


class CaseError(ChronokitError):
    """Wraps an error raised while processing one case of a collection."""

    def __init__(self, case_index, error):
        self.case_index = case_index
        self.error = error
        super().__init__(f"case {case_index}: {type(error).__name__}: {error}")
