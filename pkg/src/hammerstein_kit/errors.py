"""Exception hierarchy shared across the toolkit."""


class HammersteinError(Exception):
    """Base class for all toolkit errors."""


class DomainError(HammersteinError):
    """Parameter outside the admissible domain (bad omega, epsilon, rho...)."""


class StripViolation(HammersteinError):
    """Requested interval [a, b] leaves the positivity strip of the kernel."""


class QuadratureFailure(HammersteinError):
    """Adaptive integration did not reach the requested tolerance."""


class RootFindFailure(HammersteinError):
    """Bracketing or bisection of an interior extremum failed."""


class ConditionViolation(HammersteinError):
    """One of the admissibility conditions on the boundary data failed."""

    def __init__(self, failed, detail=""):
        self.failed = tuple(failed)
        msg = "violated condition(s): " + ", ".join(self.failed)
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class SingularMatrix(HammersteinError):
    """2x2 resolvent system is singular or has a nonpositive determinant."""


class NonpositiveInfimum(HammersteinError):
    """inf over [a,b] of the kernel row integrals is not positive."""


class DivisionByZeroRegion(HammersteinError):
    """A ratio denominator vanishes somewhere on the scan grid."""


class EnvelopeUnavailable(HammersteinError):
    """A required growth envelope or asymptotic value is missing/not finite."""


class PositivityRequired(HammersteinError):
    """Eigenvalue-based criteria need alpha, beta given by positive measures."""


class OrderingViolation(HammersteinError):
    """The radii handed to a multiplicity case break its ordering constraints."""


class ConvergenceFailure(HammersteinError):
    """Power iteration (or a fixed-point run) hit its iteration cap."""


class GoldenMismatch(HammersteinError):
    """A bundled scenario failed to reproduce one of its pinned values."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__(
            "golden value mismatch: " + "; ".join(str(f) for f in self.failures)
        )


class SpecFileError(HammersteinError):
    """Problem-specification file could not be parsed or validated."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
