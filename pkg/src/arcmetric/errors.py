"""Exception types shared across the package."""


class ArcMetricError(Exception):
    """Base class for every error raised by arcmetric."""


class DomainError(ArcMetricError, ValueError):
    """An argument lies outside the domain of a formula."""


class EllipticError(DomainError):
    """A matrix that should be hyperbolic or parabolic has |trace| < 2."""


class ParabolicError(DomainError):
    """A hyperbolic matrix was required but |trace| == 2."""


class DegenerateError(DomainError):
    """Degenerate geometric input (equal geodesics, impossible pants)."""


class CuspArcError(DomainError):
    """Arc lengths were requested on a surface whose boundary is a cusp."""


class AssemblyError(ArcMetricError):
    """A glued representation failed its post-assembly invariant check."""

    def __init__(self, message, slot=None):
        super().__init__(message if slot is None else f"{message} (slot {slot})")
        self.slot = slot


class EmptyFamilyError(DomainError):
    pass


class PeriodicOrReducibleError(DomainError):
    """A pseudo-Anosov class was required."""


class SearchDomainError(DomainError):
    pass
