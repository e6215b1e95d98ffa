"""Domain exceptions for mobius-orbits."""


class MobiusOrbitsError(Exception):
    """Base exception for all mobius-orbits errors."""


class ZeroQuaternionError(MobiusOrbitsError):
    """Raise when an operation needs a nonzero quaternion and gets zero."""


class PolarAxisDegenerateError(MobiusOrbitsError):
    """Raise when an axis lies on the polar axis and has no adapted frame."""


class NotQuaternionicError(MobiusOrbitsError):
    """Raise when Möbius coefficients lack the (ζ, −ω, ω̄, ζ̄) pattern."""


class IdentityTransformError(MobiusOrbitsError):
    """Raise when an operation is undefined for the identity transformation."""


class DegenerateOrbitError(MobiusOrbitsError):
    """Raise when an orbit has no well-defined generator."""


class IndeterminateFormError(MobiusOrbitsError):
    """Raise when extended-plane arithmetic hits ∞−∞, 0·∞, ∞/∞ or 0/0."""


class ConfigurationError(MobiusOrbitsError):
    """Raise when configuration or command input is invalid."""


class ReportError(MobiusOrbitsError):
    """Raise when a report cannot be written."""
