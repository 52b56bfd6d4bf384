"""Exception types shared across the library."""


class AbdiracError(Exception):
    """Base class for all library errors."""


class OutOfRangeError(AbdiracError):
    """Order/argument combination outside the supported evaluation range."""


class SingularArgumentError(AbdiracError):
    """Evaluation requested at a genuine singularity (z=0, t=0, ...)."""


class PoleError(AbdiracError):
    """Parameter sits on a pole of the function (e.g. Kummer c = 0, -1, -2, ...)."""


class RegionError(AbdiracError):
    """Radial coordinate outside the region a solution is defined on."""


class RegimeError(AbdiracError):
    """Formula invoked outside its validity window (asymptotic misuse, barrier height, ...)."""


class TruncationError(AbdiracError):
    """Partial-wave tail could not be pushed below the requested tolerance."""


class QuadratureError(AbdiracError):
    """Quadrature or extrapolation failed to converge to the requested tolerance."""


class ConfigError(AbdiracError):
    """Invalid run configuration (CLI / service layer)."""
