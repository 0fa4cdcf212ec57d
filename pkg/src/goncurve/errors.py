"""Exception types raised across the package."""


class GoncurveError(Exception):
    """Base class for all package errors."""


class ZeroPoint(GoncurveError):
    """Both homogeneous coordinates of a point vanish."""


class DegenerateInput(GoncurveError):
    """Repeated points, or inputs that make a construction ill-posed."""


class BasePoint(GoncurveError):
    """A pencil was evaluated at a common zero of its two forms."""


class DegeneratePencil(GoncurveError):
    """The two forms of a pencil are proportional (constant map)."""


class ExhaustedRetries(GoncurveError):
    """A randomized selection ran out of attempts."""


class SingularSystem(GoncurveError):
    """A linear system is numerically singular."""


class BadShape(GoncurveError):
    """Matrix shapes are inconsistent."""


class RankMismatch(GoncurveError):
    """A matrix does not have the required rank."""


class InvalidCurve(GoncurveError):
    """Curve data violates a family invariant."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class BadGenus(GoncurveError):
    """Genus outside the supported range."""


class TooLarge(GoncurveError):
    """Subset enumeration would exceed the configured budget."""


class SolverBudgetExceeded(GoncurveError):
    """The numeric search failed where existence is guaranteed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
