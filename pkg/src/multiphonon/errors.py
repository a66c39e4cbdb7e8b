"""Exception hierarchy shared by all multiphonon modules.

Every error raised on a validated code path derives from
:class:`MultiphononError`, so callers (and the CLI) can separate domain or
validation failures (exit code 1) from genuine usage errors and bugs.
"""


class MultiphononError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MultiphononError, ValueError):
    """An input is outside the mathematical domain of an operation."""


class CapabilityError(MultiphononError):
    """A request exceeds the numerically certified range of an algorithm.

    Raised instead of returning silently inaccurate values, e.g. for
    vibrational quantum numbers beyond the validated recursion depth.
    """


class AccuracyError(MultiphononError):
    """A numerical oracle cannot certify the accuracy that was requested."""


class ModeLookupError(MultiphononError, KeyError):
    """A vibrational mode label is not present in a defect configuration."""

    def __str__(self):
        # KeyError would repr-quote the message.
        return self.args[0] if self.args else ""


class DegeneracyError(MultiphononError, ZeroDivisionError):
    """A well-posed answer does not exist (zero denominator or divergence)."""


class InfeasibleKineticsError(MultiphononError):
    """Measured lifetimes and the nonradiative ratio admit no physical solution."""


class FitPreconditionError(MultiphononError):
    """A histogram does not satisfy the preconditions for lifetime fitting."""


class FitError(MultiphononError):
    """The lifetime fit failed to converge or the data is unidentifiable.

    Carries the iteration trace (list of ``(iteration, params, objective)``
    tuples) for diagnosis.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []


class ConfigSyntaxError(MultiphononError):
    """A defect configuration document is not well-formed JSON."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ConfigValidationError(MultiphononError):
    """A well-formed configuration document violates the schema.

    ``key_path`` names the offending key (e.g. ``modes[1].w_eg``); ``line``
    is the best-effort line of that key in the source document.
    """

    def __init__(self, message, key_path=None, line=None):
        super().__init__(message)
        self.key_path = key_path
        self.line = line
