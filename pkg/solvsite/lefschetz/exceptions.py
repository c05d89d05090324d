"""
Errors raised by the lefschetz app.

Every error carries the process exit status the management command reports
for it: 2 for usage errors (bad input), 1 for mathematical precondition
failures and internal invariant violations.
"""


class LefschetzError(Exception):
    """Base class for every error the app raises on purpose."""

    exit_code = 1


# --- Usage errors (exit status 2) ---

class UsageError(LefschetzError):
    exit_code = 2


class ScalarFormatError(UsageError):
    pass


class FormExpressionError(UsageError):
    """A form expression could not be parsed against the target algebra."""

    def __init__(self, message, text=''):
        super().__init__(message)
        self.text = text


class UnknownAlgebraError(UsageError):
    def __init__(self, name, valid_names):
        super().__init__(
            f"unknown algebra {name!r}; valid names: {', '.join(valid_names)}"
        )
        self.name = name
        self.valid_names = tuple(valid_names)


class AlgebraLoadError(UsageError):
    """An algebra file is malformed or its differential does not square to zero."""

    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


# --- Mathematical precondition failures (exit status 1) ---

class PreconditionError(LefschetzError):
    exit_code = 1


class NotClosedError(PreconditionError):
    def __init__(self, message, differential=None):
        super().__init__(message)
        # d(a), kept so callers can report it.
        self.differential = differential


class DegenerateFormError(PreconditionError):
    pass


class NotAlmostComplexError(PreconditionError):
    pass


class StructuralError(PreconditionError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class UnsupportedMetricError(PreconditionError):
    pass


class CertificateFailure(PreconditionError):
    pass


class InvariantViolation(LefschetzError):
    """Two computations that must agree did not. Signals a convention bug."""

    exit_code = 1
